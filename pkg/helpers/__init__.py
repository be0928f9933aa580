"""helpers package init"""

__all__ = ["errors", "settings"]
