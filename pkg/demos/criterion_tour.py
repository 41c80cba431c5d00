"""Tour of the admissibility test.

For each operad in the catalog we compute the S3-closure F of the part of
the relation space that can be written with the outside argument in first
or last position, and compare dim F against dim R.  Equality means the
operad admits a planar (nonsymmetric) presentation.
"""

from operad_forge.arity3 import catalog, format_element
from operad_forge.manin import admits_nonsymmetric

NAMES = ["As", "Nov", "Zin", "Bicom", "Flex", "AntiFlex",
         "Alt", "Assosym", "Leib", "PreLie"]


def main():
    print(f"{'operad':>9} {'dim R':>6} {'dim F':>6} {'dim P(3)':>9}  verdict")
    for name in NAMES:
        r = admits_nonsymmetric(catalog(name))
        verdict = "admits" if r.admits else "does not admit"
        print(f"{name:>9} {r.dim_R:>6} {r.dim_F:>6} {r.dim_P3:>9}  {verdict}")

    print()
    print("The Leibniz operad fails the test. Its full relation space is")
    print("6-dimensional, but only a 3-dimensional S3-stable piece can be")
    print("put in two-outside form, generated by:")
    for g in admits_nonsymmetric(catalog("Leib")).F_generators:
        print("   ", format_element(g))


if __name__ == "__main__":
    main()
