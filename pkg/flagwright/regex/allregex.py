'''
Centralized file that holds all regular expressions created in this package.
'''
from flagwright.regex.types import *
from flagwright.regex.terms import *
