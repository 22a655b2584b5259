from flagwright.algebra import qcoeff, laurent, symmetrize
