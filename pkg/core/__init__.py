"""Shared configuration, errors, check records and serialization."""

__all__ = ["certificate_store", "checks", "config_loader", "errors", "serialization"]
