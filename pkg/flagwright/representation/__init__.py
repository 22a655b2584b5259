from flagwright.representation import flagable, convolution, polyrep, relations
