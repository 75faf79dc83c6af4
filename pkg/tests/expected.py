"""Frozen expected values for the worked examples in the test suite."""

# jets of the monomial x*y*z at order 2, highest coefficient first
XYZ_JET2_GENERATORS = [
    "y0*z0*x2+x0*z0*y2+x0*y0*z2+z0*x1*y1+y0*x1*z1+x0*y1*z1",
    "y0*z0*x1+x0*z0*y1+x0*y0*z1",
    "x0*y0*z0",
]

# radical of those jets, in canonical descending order
XYZ_JET2_RADICAL = [
    "y0*z0*x2", "x0*z0*y2", "x0*y0*z2", "z0*x1*y1", "y0*x1*z1",
    "x0*y1*z1", "y0*z0*x1", "x0*z0*y1", "x0*y0*z1", "x0*y0*z0",
]

# minimal primes of that radical, as unordered variable-name sets
XYZ_JET2_MINIMAL_PRIMES = [
    {"z0", "y0", "x0"}, {"z0", "y0", "z1"}, {"z0", "y0", "y1"},
    {"z0", "x0", "z1"}, {"z0", "x0", "x1"}, {"z0", "z1", "z2"},
    {"y0", "x0", "y1"}, {"y0", "x0", "x1"}, {"y0", "y1", "y2"},
    {"x0", "x1", "x2"},
]

# the 5-vertex demo graph and its first and second order jets
DEMO_EDGES = [("a", "c"), ("a", "d"), ("a", "e"),
              ("b", "c"), ("b", "d"), ("b", "e"), ("c", "e")]

DEMO_J1_EDGES = [
    {"c1", "a0"}, {"d1", "a0"}, {"e1", "a0"}, {"c1", "b0"}, {"d1", "b0"},
    {"e1", "b0"}, {"a1", "c0"}, {"b1", "c0"}, {"e1", "c0"}, {"a0", "c0"},
    {"b0", "c0"}, {"a1", "d0"}, {"b1", "d0"}, {"a0", "d0"}, {"b0", "d0"},
    {"a1", "e0"}, {"b1", "e0"}, {"c1", "e0"}, {"a0", "e0"}, {"b0", "e0"},
    {"c0", "e0"},
]

DEMO_J2_EDGES = [
    {"a1", "c1"}, {"b1", "c1"}, {"a1", "d1"}, {"b1", "d1"}, {"a1", "e1"},
    {"b1", "e1"}, {"c1", "e1"},
    {"c2", "a0"}, {"d2", "a0"}, {"e2", "a0"}, {"c1", "a0"}, {"d1", "a0"},
    {"e1", "a0"}, {"c2", "b0"}, {"d2", "b0"}, {"e2", "b0"}, {"c1", "b0"},
    {"d1", "b0"}, {"e1", "b0"}, {"a2", "c0"}, {"b2", "c0"}, {"e2", "c0"},
    {"a1", "c0"}, {"b1", "c0"}, {"e1", "c0"}, {"a0", "c0"}, {"b0", "c0"},
    {"a2", "d0"}, {"b2", "d0"}, {"a1", "d0"}, {"b1", "d0"}, {"a0", "d0"},
    {"b0", "d0"}, {"a2", "e0"}, {"b2", "e0"}, {"c2", "e0"}, {"a1", "e0"},
    {"b1", "e0"}, {"c1", "e0"}, {"a0", "e0"}, {"b0", "e0"}, {"c0", "e0"},
]

DEMO_COVERS = [{"a", "b", "c"}, {"a", "b", "e"}, {"c", "d", "e"}]

DEMO_J2_COVERS = [
    {"a2", "b2", "c2", "a1", "b1", "c1", "a0", "b0", "c0"},
    {"a2", "b2", "e2", "a1", "b1", "e1", "a0", "b0", "e0"},
    {"a2", "b2", "a1", "b1", "c1", "a0", "b0", "c0", "e0"},
    {"a2", "b2", "a1", "b1", "e1", "a0", "b0", "c0", "e0"},
    {"c2", "d2", "e2", "c1", "d1", "e1", "c0", "d0", "e0"},
    {"a1", "b1", "c1", "a0", "b0", "c0", "d0", "e0"},
    {"a1", "b1", "e1", "a0", "b0", "c0", "d0", "e0"},
    {"c1", "d1", "e1", "a0", "b0", "c0", "d0", "e0"},
]

# 3x3 generic matrix over x_(1,1)..x_(3,3), column-major fill
GENERIC_3X3_ROWS = [
    ["x_(1,1)", "x_(2,1)", "x_(3,1)"],
    ["x_(1,2)", "x_(2,2)", "x_(3,2)"],
    ["x_(1,3)", "x_(2,3)", "x_(3,3)"],
]
