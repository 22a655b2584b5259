from flagwright.regex import location, types, terms, allregex
