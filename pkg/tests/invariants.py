"""Per-reduction invariant checks shared by the engine and acceptance tests."""

from f5gb.arith import cmp_pp


class ReductionAudit:
    """``on_reduction`` callback that records every invariant violation.

    For each F5-reduction it checks that the signature and number are
    unchanged, that every step strictly lowers the working lpp, and that the
    output equals the input minus the recorded multiples of the reducers.
    """

    def __init__(self):
        self.reductions = 0
        self.steps = 0
        self.violations = []

    def __call__(self, rec):
        self.reductions += 1
        inp, out = rec.input, rec.output
        if (inp.sig, inp.num) != (out.sig, out.num):
            self.violations.append(("signature", inp, out))
        order = inp.poly.ring.order
        p = inp.poly
        for st in rec.steps:
            self.steps += 1
            if st.lpp_after is not None and cmp_pp(st.lpp_after, st.lpp_before, order) >= 0:
                self.violations.append(("lpp", st))
            p = p.sub_mul_term(st.coeff, st.mult, st.reducer.poly)
        if p != out.poly:
            self.violations.append(("reconstruction", inp, out))
