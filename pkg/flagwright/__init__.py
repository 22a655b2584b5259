from flagwright import settings
from flagwright import algebra, combinatorics, representation, regex
from flagwright import flagwright
