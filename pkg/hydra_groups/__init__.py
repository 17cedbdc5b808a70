"""Membership, normal forms and finite quotients for hydra groups and their generalizations."""
from .const import PACKAGE_VERSION as __version__
