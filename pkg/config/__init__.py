# Environment-driven constants and file loading
