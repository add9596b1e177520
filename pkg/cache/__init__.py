# Catalog cache on disk
