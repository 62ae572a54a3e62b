"""Print the worked examples: small Hurwitz numbers, the (5,2;4,3) closed forms, a one-part case."""

from doublehurwitz.partitions import HurwitzInput, hurwitz_oracle
from doublehurwitz.patterns import closed_form, evaluate_series, hurwitz_number, product_formula


def main():
    for mu, nu, r in [((2,), (1, 1), 1), ((3,), (2, 1), 1), ((3,), (2, 1), 3), ((5, 2), (4, 3), 4)]:
        inp = HurwitzInput(mu, nu)
        print(f"H^{r}({mu}; {nu}) = {hurwitz_number(inp, r)}   (characters: {hurwitz_oracle(inp, r)})")

    inp = HurwitzInput((5, 2), (4, 3))
    print()
    print("(5,2;4,3), default ordering:", closed_form(inp).to_latex())
    print("(5,2;4,3), ordering 1,2/1,2:", closed_form(inp, (1, 2), (1, 2)).to_latex())
    print("product formula arguments:", sorted(product_formula(inp)))
    print("series:", evaluate_series(closed_form(inp), N=8).to_text())

    one = HurwitzInput((6,), (3, 2, 1))
    print()
    print("(6;3,2,1):", closed_form(one).to_latex())


if __name__ == "__main__":
    main()
