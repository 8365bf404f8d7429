# Tests module
