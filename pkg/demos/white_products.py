"""White products with the associative operad, worked in full.

As o P lives on four binary operations (two planar products < and > and
their argument swaps).  Its arity-3 relation space is the kernel of the
evaluation into As(3) (x) P(3).  Identifying a > b with b < a afterwards
collapses the product back onto P; we verify this for Zin and show the
relations in both stages.
"""

from operad_forge.arity3 import catalog, format_element
from operad_forge.manin import symmetrize_quotient, white_product_as


def main():
    zin = catalog("Zin")
    product = white_product_as(zin)
    print(f"As o Zin: {len(product.relations)} relation generators,")
    print(f"relation space dim {product.relation_space().dim} in Q^48,")
    print(f"arity-3 quotient dim {48 - product.relation_space().dim}")
    print()
    print("a few of the kernel generators:")
    for rel in product.relations[:4]:
        print("   ", format_element(rel))

    sym = symmetrize_quotient(product)
    print()
    print("after identifying a>b with b<a the relation space becomes")
    print(f"dim {sym.relation_space().dim}, and it equals the Zinbiel")
    print("relation space:", sym.relation_space() == zin.relation_space())

    print()
    print("the same collapse on As o Alt lands on the flexible operad:")
    sym_alt = symmetrize_quotient(white_product_as(catalog("Alt")))
    flex = catalog("Flex")
    print("   relation spaces equal:",
          sym_alt.relation_space() == flex.relation_space())


if __name__ == "__main__":
    main()
