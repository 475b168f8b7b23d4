"""Command line interface for polecover."""
