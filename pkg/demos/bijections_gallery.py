"""The three correspondences, printed side by side for small arities.

Zinbiel normal forms pair with planar binary trees, bicommutative normal
forms with EN lattice words, and flexible normal forms with the normal
forms of the one-relation z/t system.
"""

from operad_forge import bijections as bj, systems
from operad_forge.treeterm import format_tree


def main():
    n = 3

    print(f"Zin normal forms of arity {n} vs planar binary trees:")
    for t in systems.normal_forms("Zin", n):
        print(f"   {format_tree(t):<22} {bj.format_pbt(bj.zin_to_pbt(t))}")
    print()

    print(f"Bicom normal forms of arity {n} vs lattice words:")
    for t in systems.normal_forms("Bicom", n):
        print(f"   {format_tree(t):<22} {bj.bicom_to_word(t)}")
    print()

    print(f"Flex normal forms of arity {n} vs z/t normal forms:")
    for t in systems.normal_forms("Flex", n):
        print(f"   {format_tree(t):<22} {format_tree(bj.flex_to_L(t))}")
    print()

    for m in range(1, 9):
        zin = systems.normal_forms("Zin", m)
        bic = systems.normal_forms("Bicom", m)
        flex = systems.normal_forms("Flex", m)
        assert all(bj.pbt_to_zin(bj.zin_to_pbt(t)) == t for t in zin)
        assert all(bj.word_to_bicom(bj.bicom_to_word(t)) == t for t in bic)
        assert all(bj.L_to_flex(bj.flex_to_L(t)) == t for t in flex)
    print("round trips verified exhaustively through arity 8")


if __name__ == "__main__":
    main()
