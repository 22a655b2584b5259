from flagwright.combinatorics import flagcomb, drinfeld
