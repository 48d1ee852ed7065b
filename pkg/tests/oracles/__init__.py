"""Independent reference implementations used to judge the package.

Everything in this directory is written against the documented math only,
before and without looking at the corresponding psekit module, so that a
bug in the package cannot hide in its own test."""
