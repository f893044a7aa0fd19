__version__ = '1.0.0'

# Area packages, from the finite-dimensional algebra up to the pipelines
__all__ = ['Linalg', 'TypeA', 'Ambient', 'Derived', 'Orbit', 'Abelian', 'Snake', 'Intermediate', 'Monoid',
           'Pipelines', 'Manager', 'Utils']
