# Синхронизируется с version в pyproject.toml
__version__ = "0.1.0"
