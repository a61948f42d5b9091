DOUBLE = 'float64'
COMPLEX = 'complex128'

# special functions
TOL = 1.e-12
MAX_TERMS = 2000
Y0 = 15.

# greens
BOX_WIDTHS = 20.

# coupledsim
DEFAULT_STEPS = 1024
