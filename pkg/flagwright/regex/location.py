'''
Regular expressions for matching location of data within a string.
'''

'''
Defines regex strings which anchor a pattern to the whole string

Must be prefixed/trailed by whitespace/nothing
'''
_not_prefixed_impl = r"(?:^\s*)"
_not_followed_impl = r"(?:\s*$)"

# Separator between list entries on the command line
_list_sep_impl = r"(?:\s*,\s*)"
