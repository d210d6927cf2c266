"""Print the computed calculus tables next to the printed ones.

Computed values are shown after r -> r^-1 so both columns use the paper's
orientation.  Differing cells are marked with '!'.
"""

from glrs.calculus import compare_tables, mirror
from glrs.presets import load_preset, reference_calculus
from glrs.workbench import Context


def main():
    ctx = Context(load_preset("ars-dual"), 4)
    F = ctx.calculus()
    ref = reference_calculus(ctx.p)
    for name in ("sigma", "chi", "conv", "d"):
        print(f"== {name}")
        for key, printed in ref[name].items():
            cmp = compare_tables(F, {name: {key: printed}})
            mark = " " if cmp.ok else "!"
            got = mirror(getattr(F, name)[key])
            label = " ".join(key) if isinstance(key, tuple) else key
            print(f"{mark} {label:<8} computed {got}")
            if not cmp.ok:
                print(f"  {'':<8} printed  {printed}")


if __name__ == "__main__":
    main()
