"""Resources tests package."""
