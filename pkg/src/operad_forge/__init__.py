"""Exact-arithmetic toolkit for nonsymmetric versions of binary quadratic operads.

Submodules:
  exactlin   exact rational linear algebra (RREF, spans, intersections)
  arity3     free arity-3 module, S3 action, operad catalog
  manin      white product with As and the nonsymmetric-version criterion
  treeterm   planar tree rewriting, overlaps, confluence certification
  systems    the Zin / Bicom / Flex / AntiFlex / L systems and their counts
  oracle     brute-force dimension computation (trust anchor)
  bijections normal forms vs binary trees, lattice words, L-trees
  cli        batch command-line front end
"""

from . import arity3, bijections, exactlin, manin, oracle, systems, treeterm

__all__ = ["arity3", "bijections", "exactlin", "manin", "oracle", "systems",
           "treeterm"]
__version__ = "0.1.0"
