# Tests for the vanderspec package and its CLI
