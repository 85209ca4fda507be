# GENERATED VERSION FILE
# TIME: Sat Oct 17 12:10:12 2026
__version__ = '0.1.0+unknown'
short_version = '0.1.0'
version_info = (0, 1, 0)
