"""Exhaustive verification suites for the algebraic identities.

Each suite enumerates a bounded family (words over a two-symbols-per-weight
alphabet, biwords with degrees in {1, 2}, or both) and returns the list of
violations; an empty list is a pass.  Violations carry the inputs and both
sides so a failure prints a minimal counterexample.  Enumeration order is
fixed, so suites are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lincomb import LinComb
from . import words as W
from . import biwords as B
from . import action as act
from . import descent as D
from . import rigidity as R

TEST_DEGREES = (1, 2)


@dataclass
class Failure:
    identity: str
    inputs: tuple
    lhs: object
    rhs: object

    def __str__(self):
        ins = ", ".join(str(i) for i in self.inputs)
        return f"{self.identity} fails at ({ins}):\n  lhs = {self.lhs}\n  rhs = {self.rhs}"


def _words_up_to(max_weight: int, symbols: int = 2) -> list[W.Word]:
    alphabet = W.standard_alphabet(max(max_weight, 1), symbols)
    out = []
    for w in range(1, max_weight + 1):
        out.extend(W.enumerate_words(w, alphabet))
    return out


def _biwords_up_to(max_weight: int, degrees=TEST_DEGREES) -> list[B.Biword]:
    out = []
    for w in range(1, max_weight + 1):
        out.extend(B.enumerate_biwords(w, degrees))
    return out


# -- word suites -------------------------------------------------------------

def check_word_shuffle_axioms(max_weight: int) -> list[Failure]:
    """Zinbiel/dendriform axioms, shuffle commutativity and associativity,
    coassociativity of deconcatenation, the coproduct compatibility of the
    half-product, and the antipode convolution identity."""
    out = []
    words = _words_up_to(max_weight)
    for a in words:
        for b in words:
            if a.weight + b.weight > max_weight:
                continue
            sh_ab = W.word_shuffle(a, b)
            if sh_ab != W.word_shuffle(b, a):
                out.append(Failure("shuffle-commutativity", (a, b), sh_ab, W.word_shuffle(b, a)))
            for c in words:
                if a.weight + b.weight + c.weight > max_weight:
                    continue
                out.extend(_dendriform_triple_word(a, b, c))
    out.extend(_word_coproduct_checks(words, max_weight))
    return out


def _dendriform_triple_word(a, b, c) -> list[Failure]:
    la, lb, lc = (LinComb.single(x) for x in (a, b, c))
    prec, succ, star = W.word_prec_lc, _word_succ_lc, W.word_shuffle_lc
    out = []
    lhs = prec(prec(la, lb), lc)
    rhs = prec(la, star(lb, lc))
    if lhs != rhs:
        out.append(Failure("half-shuffle-axiom (a<b)<c = a<(b sh c)", (a, b, c), lhs, rhs))
    lhs = succ(star(la, lb), lc)
    rhs = succ(la, succ(lb, lc))
    if lhs != rhs:
        out.append(Failure("(a sh b)>c = a>(b>c)", (a, b, c), lhs, rhs))
    lhs = prec(succ(la, lb), lc)
    rhs = succ(la, prec(lb, lc))
    if lhs != rhs:
        out.append(Failure("(a>b)<c = a>(b<c)", (a, b, c), lhs, rhs))
    return out


def _word_succ_lc(x: LinComb, y: LinComb) -> LinComb:
    return W.word_prec_lc(y, x)


def _word_coproduct_checks(words, max_weight: int) -> list[Failure]:
    out = []
    for w in words:
        cop = W.deconcat(w)
        lhs = LinComb.zero()
        rhs = LinComb.zero()
        for (left, right), c in cop.terms().items():
            for (l1, l2), c2 in W.deconcat(left).terms().items():
                lhs = lhs + LinComb.single((l1, l2, right), c * c2)
            for (r1, r2), c2 in W.deconcat(right).terms().items():
                rhs = rhs + LinComb.single((left, r1, r2), c * c2)
        if lhs != rhs:
            out.append(Failure("deconcat-coassociativity", (w,), lhs, rhs))
        # antipode convolution both ways: S * Id = Id * S = 0 on nonempty words
        conv = LinComb.zero()
        vnoc = LinComb.zero()
        for (left, right), c in cop.terms().items():
            conv = conv + W.word_shuffle_lc(W.word_antipode(left), LinComb.single(right)) * c
            vnoc = vnoc + W.word_shuffle_lc(LinComb.single(left), W.word_antipode(right)) * c
        if not conv.is_zero():
            out.append(Failure("antipode-convolution-left", (w,), conv, 0))
        if not vnoc.is_zero():
            out.append(Failure("antipode-convolution-right", (w,), vnoc, 0))
    for x in words:
        for y in words:
            if x.weight + y.weight > max_weight:
                continue
            out.extend(_word_left_compatibility(x, y))
    return out


def _word_left_compatibility(x, y) -> list[Failure]:
    # Delta(x < y) = x' < y' (x) x'' sh y'' + 1 (x) x < y
    xy = W.word_prec(x, y)
    lhs = LinComb.zero()
    for key, c in xy.terms().items():
        lhs = lhs + W.deconcat(key) * c
    rhs = LinComb.zero()
    for (x1, x2), cx in W.deconcat(x).terms().items():
        for (y1, y2), cy in W.deconcat(y).terms().items():
            left = W.word_prec(x1, y1)
            if left.is_zero():
                continue
            right = W.word_shuffle(x2, y2)
            for kl, cl in left.terms().items():
                for kr, cr in right.terms().items():
                    rhs = rhs + LinComb.single((kl, kr), cx * cy * cl * cr)
    for key, c in xy.terms().items():
        rhs = rhs + LinComb.single((W.EMPTY_WORD, key), c)
    if lhs != rhs:
        return [Failure("word-left-compatibility", (x, y), lhs, rhs)]
    return []


# -- biword suites --------------------------------------------------------------

def check_biword_dendriform(max_weight: int) -> list[Failure]:
    """The three half-product associativity axioms on biword triples."""
    out = []
    biwords = _biwords_up_to(max_weight)
    for a in biwords:
        for b in biwords:
            if a.weight + b.weight >= max_weight:
                continue
            ab_prec = B.biword_prec(a, b)
            ab_star = B.biword_star(a, b)
            ab_succ = B.biword_succ(a, b)
            for c in biwords:
                if a.weight + b.weight + c.weight > max_weight:
                    continue
                lc_ = LinComb.single(c)
                lhs = B.biword_prec_lc(ab_prec, lc_)
                rhs = B.biword_prec_lc(LinComb.single(a), B.biword_star(b, c))
                if lhs != rhs:
                    out.append(Failure("(a<b)<c = a<(b*c)", (a, b, c), lhs, rhs))
                lhs = B.biword_succ_lc(ab_star, lc_)
                rhs = B.biword_succ_lc(LinComb.single(a), B.biword_succ(b, c))
                if lhs != rhs:
                    out.append(Failure("(a*b)>c = a>(b>c)", (a, b, c), lhs, rhs))
                lhs = B.biword_prec_lc(ab_succ, lc_)
                rhs = B.biword_succ_lc(LinComb.single(a), B.biword_prec(b, c))
                if lhs != rhs:
                    out.append(Failure("(a>b)<c = a>(b<c)", (a, b, c), lhs, rhs))
    return out


def _tensor_product_sum(pairs_x, pairs_y, left_op, right_op) -> LinComb:
    out = LinComb.zero()
    for (x1, x2), cx in pairs_x:
        for (y1, y2), cy in pairs_y:
            left = left_op(x1, y1)
            if left.is_zero():
                continue
            right = right_op(x2, y2)
            for kl, cl in left.terms().items():
                for kr, cr in right.terms().items():
                    out = out + LinComb.single((kl, kr), cx * cy * cl * cr)
    return out


def _tensor_with_fixed_right(pairs_x, fixed, side_op) -> LinComb:
    """sum (op(x1, fixed)) (x) x2 over the cut pairs."""
    out = LinComb.zero()
    for (x1, x2), cx in pairs_x:
        left = side_op(x1, fixed)
        for kl, cl in left.terms().items():
            out = out + LinComb.single((kl, x2), cx * cl)
    return out


def check_biword_bidendriform(max_weight: int) -> list[Failure]:
    """The four half-coproduct/half-product compatibilities on biword pairs."""
    out = []
    biwords = _biwords_up_to(max_weight)
    for x in biwords:
        dp_x = list(B.coproduct_prec(x).terms().items())
        ds_x = list(B.coproduct_succ(x).terms().items())
        dt_x = dp_x + ds_x
        for y in biwords:
            if x.weight + y.weight > max_weight:
                continue
            dp_y = list(B.coproduct_prec(y).terms().items())
            ds_y = list(B.coproduct_succ(y).terms().items())
            dt_y = dp_y + ds_y
            # prec coproduct of x < y
            lhs = B.coproduct_prec_lc(B.biword_prec(x, y))
            rhs = _tensor_product_sum(dp_x, dt_y, B.biword_prec, B.biword_star)
            rhs = rhs + LinComb.single((x, y))
            for (y1, y2), cy in dt_y:
                for k, c in B.biword_prec(x, y1).terms().items():
                    rhs = rhs + LinComb.single((k, y2), cy * c)
            for (x1, x2), cx in dp_x:
                for k, c in B.biword_star(x2, y).terms().items():
                    rhs = rhs + LinComb.single((x1, k), cx * c)
            rhs = rhs + _tensor_with_fixed_right(dp_x, y, B.biword_prec)
            if lhs != rhs:
                out.append(Failure("prec-coproduct of x<y", (x, y), lhs, rhs))

            # succ coproduct of x < y
            lhs = B.coproduct_succ_lc(B.biword_prec(x, y))
            rhs = _tensor_product_sum(ds_x, dt_y, B.biword_prec, B.biword_star)
            rhs = rhs + _tensor_with_fixed_right(ds_x, y, B.biword_prec)
            for (x1, x2), cx in ds_x:
                for k, c in B.biword_star(x2, y).terms().items():
                    rhs = rhs + LinComb.single((x1, k), cx * c)
            if lhs != rhs:
                out.append(Failure("succ-coproduct of x<y", (x, y), lhs, rhs))

            # prec coproduct of x > y
            lhs = B.coproduct_prec_lc(B.biword_succ(x, y))
            rhs = _tensor_product_sum(dp_x, dt_y, B.biword_succ, B.biword_star)
            rhs = rhs + _tensor_with_fixed_right(dp_x, y, B.biword_succ)
            for (y1, y2), cy in dt_y:
                for k, c in B.biword_succ(x, y1).terms().items():
                    rhs = rhs + LinComb.single((k, y2), cy * c)
            if lhs != rhs:
                out.append(Failure("prec-coproduct of x>y", (x, y), lhs, rhs))

            # succ coproduct of x > y
            lhs = B.coproduct_succ_lc(B.biword_succ(x, y))
            rhs = _tensor_product_sum(ds_x, dt_y, B.biword_succ, B.biword_star)
            rhs = rhs + LinComb.single((y, x))
            for (y1, y2), cy in dt_y:
                for k, c in B.biword_star(x, y2).terms().items():
                    rhs = rhs + LinComb.single((y1, k), cy * c)
            rhs = rhs + _tensor_with_fixed_right(ds_x, y, B.biword_succ)
            if lhs != rhs:
                out.append(Failure("succ-coproduct of x>y", (x, y), lhs, rhs))
    return out


def check_biword_bialgebra(max_weight: int) -> list[Failure]:
    """Coassociativity of the full coproduct and the morphism property for star."""
    out = []
    biwords = [B.UNIT_BIWORD] + _biwords_up_to(max_weight)
    for x in biwords:
        cop = B.hopf_coproduct(LinComb.single(x))
        lhs = LinComb.zero()
        rhs = LinComb.zero()
        for (left, right), c in cop.terms().items():
            for (l1, l2), c2 in B.hopf_coproduct(LinComb.single(left)).terms().items():
                lhs = lhs + LinComb.single((l1, l2, right), c * c2)
            for (r1, r2), c2 in B.hopf_coproduct(LinComb.single(right)).terms().items():
                rhs = rhs + LinComb.single((left, r1, r2), c * c2)
        if lhs != rhs:
            out.append(Failure("hopf-coassociativity", (x,), lhs, rhs))
    for x in biwords:
        cop_x = list(B.hopf_coproduct(LinComb.single(x)).terms().items())
        for y in biwords:
            if x.weight + y.weight > max_weight:
                continue
            lhs = B.hopf_coproduct(B.biword_star(x, y))
            cop_y = list(B.hopf_coproduct(LinComb.single(y)).terms().items())
            rhs = _tensor_product_sum(cop_x, cop_y, B.biword_star, B.biword_star)
            if lhs != rhs:
                out.append(Failure("coproduct-star-morphism", (x, y), lhs, rhs))
    return out


def check_pn_coproducts(max_weight: int) -> list[Failure]:
    """succ coproduct of p_n vanishes; prec coproduct splits as sum p_i (x) p_{n-i}."""
    out = []
    for n in range(1, max_weight + 1):
        pn = D.p_n(n)
        succ_part = B.coproduct_succ_lc(pn)
        if not succ_part.is_zero():
            out.append(Failure("succ-coproduct of p_n", (n,), succ_part, 0))
        lhs = B.coproduct_prec_lc(pn)
        rhs = LinComb.zero()
        for i in range(1, n):
            for ki, ci in D.p_n(i).terms().items():
                for kj, cj in D.p_n(n - i).terms().items():
                    rhs = rhs + LinComb.single((ki, kj), ci * cj)
        if lhs != rhs:
            out.append(Failure("prec-coproduct of p_n", (n,), lhs, rhs))
    return out


def check_pi_primitive(max_weight: int) -> list[Failure]:
    """The three idempotent routes agree and both half-coproducts vanish."""
    out = []
    for n in range(1, max_weight + 1):
        closed = D.pi_n(n, "closed")
        for route in ("alternating", "recursive"):
            other = D.pi_n(n, route)
            if other != closed:
                out.append(Failure(f"pi route {route}", (n,), other, closed))
        for name, cop in (("prec", B.coproduct_prec_lc), ("succ", B.coproduct_succ_lc)):
            img = cop(closed)
            if not img.is_zero():
                out.append(Failure(f"{name}-coproduct of pi_n", (n,), img, 0))
    return out


def check_idempotents(max_weight: int) -> list[Failure]:
    """pi over compositions: orthogonal idempotents, complete to p_n, and the
    advertised projection action on words."""
    out = []
    for n in range(1, max_weight + 1):
        comps = list(W.compositions(n))
        values = {c: D.pi_composite(c) for c in comps}
        total = LinComb.zero()
        for c in comps:
            total = total + values[c]
            for c2 in comps:
                prod = B.internal_compose_lc(values[c], values[c2])
                expected = values[c] if c == c2 else LinComb.zero()
                if prod != expected:
                    out.append(Failure("pi-orthogonality", (c, c2), prod, expected))
        if total != D.p_n(n):
            out.append(Failure("pi-completeness", (n,), total, D.p_n(n)))
    words = _words_up_to(max_weight)
    for n in range(1, max_weight + 1):
        for c in W.compositions(n):
            value = D.pi_composite(c)
            for w in words:
                got = act.endo_apply(value, LinComb.single(w))
                expected = LinComb.single(w) if w.profile() == c else LinComb.zero()
                if got != expected:
                    out.append(Failure("pi-projection-action", (c, w), got, expected))
    return out


def check_action_compatibility(max_weight: int, max_size: int = 3) -> list[Failure]:
    """Biword half-products realize the convolution half-products, and the
    internal product matches composition of actions."""
    out = []
    biwords = [B.UNIT_BIWORD]
    for w in range(1, max_weight):
        biwords.extend(B.enumerate_biwords(w))
    alphabet = W.standard_alphabet(max_weight, 2)
    for a in biwords:
        for b in biwords:
            total = a.weight + b.weight
            if total > max_weight or total == 0:
                continue
            probes = W.enumerate_words(total, alphabet)
            products = {
                "prec": B.biword_prec(a, b),
                "succ": B.biword_succ(a, b),
                "star": B.biword_star(a, b),
            }
            fa, fb = LinComb.single(a), LinComb.single(b)
            for probe in probes:
                for op, prod in products.items():
                    lhs = act.endo_apply(prod, LinComb.single(probe))
                    rhs = act.convolution_via_action(fa, fb, probe, op)
                    if lhs != rhs:
                        out.append(Failure(f"action-{op}", (a, b, probe), lhs, rhs))
    sized = []
    for k in range(0, max_size + 1):
        sized.extend(B.enumerate_biwords_by_size(k, TEST_DEGREES))
    for a in sized:
        for b in sized:
            lhs = B.internal_compose(a, b)
            rhs = act.compose_via_action(a, b)
            if lhs != rhs:
                out.append(Failure("internal-compose-vs-action", (a, b), lhs, rhs))
    return out


def check_tau_on_words(max_weight: int) -> list[Failure]:
    """On the shuffle algebra of words: tau fixes letters, kills longer words
    and squares to itself; the antipode is the signed reversal and inverts
    the identity under convolution."""
    out = []
    words = _words_up_to(max_weight)
    for w in words:
        if W.word_antipode(w) != W.signed_reversal(w):
            out.append(Failure("antipode-signed-reversal", (w,), W.word_antipode(w), W.signed_reversal(w)))
    A = R.shuffle_presentation(W.standard_alphabet(max_weight, 2), max_weight)
    for label in A.labels():
        t = R.tau(A, label)
        word_len = label.count(".") + 1
        expected = LinComb.single(label) if word_len == 1 else LinComb.zero()
        if t != expected:
            out.append(Failure("tau-on-words", (label,), t, expected))
        tt = R.tau(A, t)
        if tt != t:
            out.append(Failure("tau-idempotent", (label,), tt, t))
    return out


def check_rigidity(max_weight: int, symbols: int = 2) -> list[Failure]:
    """Validate the word model, decompose every label with round-trip
    evaluation, and compare nested-word counts with ambient dimensions."""
    out = []
    alphabet = W.standard_alphabet(max_weight, symbols)
    A = R.shuffle_presentation(alphabet, max_weight)
    violations = validate_suite_violations(A)
    for v in violations:
        out.append(Failure("presentation-axiom", (v.axiom,) + v.inputs, v.lhs, v.rhs))
    if violations:
        return out
    prim = R.primitive_basis(A)
    dims = {w: len(rows) for w, rows in prim.items()}
    for w in range(1, max_weight + 1):
        expected = len(A.basis.get(w, []))
        got = R.nested_word_count(dims, w)
        if got != expected:
            out.append(Failure("nested-word-count", (w,), got, expected))
    for label in A.labels():
        try:
            R.primitive_decomposition(A, label)
        except R.RigidityError as exc:
            out.append(Failure("decomposition-roundtrip", (label,), str(exc), ""))
    return out


def validate_suite_violations(A):
    return R.validate_presentation(A)


SUITES = {
    "shuffle-axioms": check_word_shuffle_axioms,
    "dendriform": check_biword_dendriform,
    "bidendriform": check_biword_bidendriform,
    "bialgebra": check_biword_bialgebra,
    "pn-coproduct": check_pn_coproducts,
    "pi-primitive": check_pi_primitive,
    "idempotents": check_idempotents,
    "action-compat": check_action_compatibility,
    "tau": check_tau_on_words,
    "rigidity": check_rigidity,
}

DEFAULT_SUITE_WEIGHT = 5


def run_suite(name: str, max_weight: int) -> list[Failure]:
    fn = SUITES.get(name)
    if fn is None:
        raise KeyError(name)
    return fn(max_weight)
