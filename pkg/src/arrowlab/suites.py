"""Verification suites over the instance library, one per module plus ``all``.

A suite is a list of named checks; each check is a thunk returning a
:class:`Report`.  Results are sorted by name so that reports are
deterministic for a given configuration.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from . import adjunctions as adj
from . import coend, controls, equivalences as eq, finset, functors, monoidal, monoids, profunctors
from .errors import ArrowlabError, CoendSizeError, UnknownNameError
from .reports import Report

SCHEMA = 1
FAULTS = ("strength",)


@dataclass
class Config:
    max_obj: int = 2
    coend_bound: int = 3
    fail_fast: bool = False
    inject_fault: str = None


@dataclass
class Check:
    name: str
    thunk: Callable[[], Report]
    expected_failure: bool = False


@dataclass
class CheckResult:
    name: str
    status: str
    counterexample: str = None
    elapsed_ms: int = 0

    def as_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "counterexample": self.counterexample,
                "elapsed_ms": self.elapsed_ms}


@dataclass
class SuiteReport:
    suite: str
    config: Config
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def as_dict(self) -> dict:
        return {"schema": SCHEMA, "suite": self.suite,
                "config": {"max_obj": self.config.max_obj, "coend_bound": self.config.coend_bound},
                "checks": [c.as_dict() for c in self.checks]}

    def summary(self) -> str:
        lines = []
        for c in self.checks:
            line = f"{c.status.upper():7} {c.name}"
            if c.counterexample and c.status != "skipped":
                line += f"\n          {c.counterexample}"
            lines.append(line)
        counts = {s: sum(c.status == s for c in self.checks) for s in ("pass", "fail", "skipped")}
        lines.append(f"{self.suite}: {counts['pass']} passed, {counts['fail']} failed, {counts['skipped']} skipped")
        return "\n".join(lines)


# -- library access, with optional fault injection ---------------------------------


def _profunctors(cfg: Config, names=None):
    out = []
    for n in names or profunctors.profunctor_names():
        P = profunctors.library_profunctor(n)
        if cfg.inject_fault == "strength":
            P = profunctors.CorruptedStrength(P)
        out.append(P)
    return out


def _functors(names=None):
    return [functors.library_functor(n) for n in names or functors.functor_names()]


def _expected_unstable(F, window, K) -> Report:
    """Passes when the truncated co-Yoneda coend of ``F`` fails to stabilize at ``K``.

    Objects up to the maximal arity are probed even beyond the window: below it
    every comparison is degenerate and stabilizes trivially.
    """
    r = Report(f"stabilization [{F.name}, K={K}] (expected failure)")
    top = max(window, F.max_arity)
    verdicts = [(X, coend.stabilization_check(coend.co_yoneda_integrand(F, X), K)) for X in range(top + 1)]
    bad = [(X, v) for X, v in verdicts if not v.stable]
    r.check(bool(bad), f"unexpectedly stable at every X <= {top}")
    for X, v in bad[:1]:
        r.note(f"expected failure: X={X} {v}")
    return r


def _controls(*names):
    return [Check(f"control/{n}", controls.CONTROLS[n]) for n in names]


# -- suites ------------------------------------------------------------------------------


def finset_suite(cfg: Config):
    n = cfg.max_obj + 1
    return [
        Check("category laws", lambda: finset.check_category_laws(n)),
        Check("hom enumeration", lambda: finset.check_hom_enumeration(n)),
        Check("products", lambda: finset.check_products(n)),
        Check("curry/ev", lambda: finset.check_exponentials(n)),
        Check("cartesian isos", lambda: finset.check_cartesian_isos(n)),
    ]


def functors_suite(cfg: Config):
    w = cfg.max_obj
    out = []
    for F in _functors():
        out.append(Check(f"functor laws [{F.name}]", lambda F=F: functors.check_functor_laws(F, w + 1)))
        out.append(Check(f"strength [{F.name}]", lambda F=F: functors.check_strength_naturality(F, w)))
    for name in ("maybe-monad", "reader2-monad", "writer-or2-monad"):
        M = monoids.library_monoid(name, cfg.coend_bound)
        out.append(Check(f"naturality [{name} unit]", lambda M=M: functors.check_naturality(M.unit_map, w)))
    return out + _controls("functor-laws", "naturality")


def _co_yoneda(F, X, K) -> Report:
    r = Report(f"co-Yoneda [{F.name}, X={X}, K={K}]")
    space, iso = coend.co_yoneda_reduce(F, X, K)
    r.check(iso.is_bijective() and space.carrier.card == F.card(X),
            lambda: f"carrier {space.carrier.card} vs F X = {F.card(X)}")
    r.check(space.verify(), "a relation instance is not honored by the computed classes")
    return r


def _universal(F, X, K) -> Report:
    from .finset import FinFun, FinSet, decode

    H = coend.co_yoneda_integrand(F, X)
    space = coend.compute_coend(H, K)
    r = Report(f"universal property [{F.name}, X={X}]")
    base = F.card(X)

    def ev(w, x):
        a, k = H.split(w, x)
        return F.fmap(FinFun(FinSet(w), FinSet(X), decode(k, w, X)), a)

    for target in range(base, 5):
        r.absorb(coend.check_universal_property(space, ev, target))
    return r


def coends_suite(cfg: Config):
    w, K = cfg.max_obj, cfg.coend_bound
    out = []
    for F in _functors():
        if F.max_arity > K:
            out.append(Check(f"stabilization [{F.name}, K={K}] (expected failure)",
                             lambda F=F: _expected_unstable(F, w, K), expected_failure=True))
            continue
        for X in range(w + 1):
            H = coend.co_yoneda_integrand(F, X)
            out.append(Check(f"co-Yoneda [{F.name}, X={X}]", lambda F=F, X=X: _co_yoneda(F, X, K)))

            def stab(H=H):
                r = Report("stabilization")
                v = coend.stabilization_check(H, K)
                r.check(v.stable, lambda: str(v))
                return r

            out.append(Check(f"stabilization [{F.name}, X={X}]", stab))
            out.append(Check(f"determinism [{F.name}, X={X}]", lambda H=H: coend.check_determinism(H, K)))
        if F.max_arity <= K and F.card(1) <= 4:
            out.append(Check(f"universal property [{F.name}, X=1]", lambda F=F: _universal(F, 1, K)))
    M, R = functors.maybe(), functors.reader(2)
    for X in range(w + 1):
        out.append(Check(f"cross-check day [maybe*maybe, X={X}]",
                         lambda X=X: coend.cross_check(monoidal.DayTensor(M, M, K).space(X))))
        out.append(Check(f"cross-check subst [maybe o reader2, X={X}]",
                         lambda X=X: coend.cross_check(monoidal.SubstTensor(M, R, K).space(X))))
    return out + _controls("factorize")


def profunctors_suite(cfg: Config):
    w = cfg.max_obj
    out = []
    for P in _profunctors(cfg):
        out.append(Check(f"profunctor laws [{P.name}]", lambda P=P: profunctors.check_profunctor_laws(P, w)))
        out.append(Check(f"strength laws [{P.name}]", lambda P=P: profunctors.check_strength_laws(P, w)))
        out.append(Check(f"sigma and varsigma at 1 [{P.name}]", lambda P=P: _sigma_at_one(P, w)))
        out.append(Check(f"identity is strong [{P.name}]",
                         lambda P=P: profunctors.check_strong_naturality(profunctors.identity_prof_nat(P), w)))
    return out + _controls("profunctor-laws", "strength-laws", "profunctor-naturality", "strong-naturality")


def _sigma_at_one(P, w) -> Report:
    r = Report(f"sigma/varsigma [{P.name}]")
    for X in range(w + 1):
        for Y in range(w + 1):
            s = profunctors.sigma_strength(P, X, Y, 1)
            r.check(s.is_bijective(), lambda: f"sigma at ({X},{Y},1) is not a bijection")
            v = profunctors.varsigma_strength(P, 1, X, Y)
            r.check(v.is_bijective(), lambda: f"varsigma at (1,{X},{Y}) is not a bijection")
            st = [P.strength(X, Y, 1, p) for p in range(P.card(X, Y))]
            r.check(len(set(st)) == P.card(X, Y) == P.card(X, Y),
                    lambda: f"strength at Z=1 is not injective at ({X},{Y})")
    return r


def _unit_cards(F, w, K) -> Report:
    r = Report(f"unit tensors [{F.name}]")
    i = functors.inclusion_functor()
    for X in range(w + 1):
        for T in (monoidal.DayTensor(i, F, K), monoidal.DayTensor(F, i, K),
                  monoidal.SubstTensor(i, F, K), monoidal.SubstTensor(F, i, K)):
            r.check(T.card(X) == F.card(X), lambda: f"{T.name}({X}) has {T.card(X)} elements, F X has {F.card(X)}")
    return r


def _day_symmetry(F, G, w, K) -> Report:
    r = Report(f"day symmetry [{F.name}, {G.name}]")
    a, b = monoidal.DayTensor(F, G, K), monoidal.DayTensor(G, F, K)
    for X in range(w + 1):
        r.check(a.card(X) == b.card(X), lambda: f"|{a.name}({X})| = {a.card(X)} but |{b.name}({X})| = {b.card(X)}")
    return r


def monoidal_suite(cfg: Config):
    w, K = cfg.max_obj, cfg.coend_bound
    M, R = functors.maybe(), functors.reader(2)
    KM = _profunctors(cfg, ["kleisli-maybe"])[0]
    H = _profunctors(cfg, ["hom"])[0]
    out = []
    for tag, objs in ((monoidal.MonoidalTag.DAY, [M, R]), (monoidal.MonoidalTag.SUBST, [M, R]),
                      (monoidal.MonoidalTag.BENABOU, [KM])):
        st = monoidal.Structure(tag, K)
        A = objs[0]
        out.append(Check(f"structural isos [{tag.value}]", lambda st=st, objs=objs: monoidal.check_structural_isos(st, objs[:1], w)))
        out.append(Check(f"triangle [{tag.value}]", lambda st=st, A=A: monoidal.check_triangle(st, A, A, w)))
        pw = w if tag is not monoidal.MonoidalTag.BENABOU else 1
        out.append(Check(f"pentagon [{tag.value}]", lambda st=st, A=A, pw=pw: monoidal.check_pentagon(st, A, A, A, A, pw)))
    for F in _functors():
        out.append(Check(f"unit tensors [{F.name}]", lambda F=F: _unit_cards(F, w, K)))
    out.append(Check("day symmetry [maybe, reader2]", lambda: _day_symmetry(M, R, w, K)))
    out.append(Check("day symmetry [maybe, writer-or2]", lambda: _day_symmetry(M, functors.writer(), w, K)))
    for P, Q in ((KM, KM), (H, KM)):
        T = monoidal.BenabouTensor(P, Q, K)
        out.append(Check(f"strength laws [{T.name}]", lambda T=T: profunctors.check_strength_laws(T, w)))
    return out + _controls("iso-pair", "structural-isos", "triangle", "pentagon")


def monoids_suite(cfg: Config):
    w, K = cfg.max_obj, cfg.coend_bound
    out = []
    for name in monoids.monoid_names():
        out.append(Check(f"monoid laws [{name}]",
                         lambda name=name: monoids.check_monoid_laws(monoids.library_monoid(name, K), w)))
    for tag in monoidal.MonoidalTag:
        out.append(Check(f"monoid laws [trivial-{tag.value}]",
                         lambda tag=tag: monoids.check_monoid_laws(monoids.trivial_monoid(tag, K), w)))
    return out + _controls("monoid-laws", "monoid-morphism")


def _iso_pair(f, g, points, name):
    r = adj.check_two_sided_inverse(f, g, points, name=name)
    return r


def _idempotency(P, w) -> Report:
    r = Report(f"idempotency [{P.name}]")
    pts = adj._points(True, w)
    _, _, delta = adj.box_comonad(P)
    _, _, mu = adj.diamond_monad(P)
    r.absorb(adj.check_bijective(delta, pts, name=f"delta[{P.name}]"))
    r.absorb(adj.check_bijective(mu, pts, name=f"mu[{P.name}]"))
    return r


def _counit_data(P, point=(2, 2)) -> Report:
    r = Report(f"eps! and eta* at {point} [{P.name}]")
    e = adj.epsilon_cayley(P).component(point)
    h = adj.eta_kleisli(P).component(point)
    r.check(not e.is_surjective(), lambda: f"eps! at {point} is unexpectedly surjective")
    r.check(h.is_bijective(), lambda: f"eta* at {point} is not a bijection")
    r.note(f"eps!: {e.dom.card} -> {e.cod.card}; eta*: {h.dom.card} -> {h.cod.card}")
    return r


def adjunctions_suite(cfg: Config):
    w = cfg.max_obj
    Fs = _functors()
    Ps = _profunctors(cfg, ["hom", "kleisli-maybe", "cayley-maybe"])
    fpts = adj._points(False, w)
    out = [
        Check("triangles [cayley]", lambda: adj.check_triangles(adj.cayley_adjunction(), Fs, Ps, w)),
        Check("triangles [kleisli]", lambda: adj.check_triangles(adj.kleisli_adjunction(), Ps, Fs, w)),
        Check("hat faithfulness search", lambda: adj.hat_faithfulness_search(window=w)),
        Check("full faithfulness [cayley]", lambda: adj.full_faithfulness_probe("cayley", window=w)),
        Check("full faithfulness [kleisli]", lambda: adj.full_faithfulness_probe("kleisli", window=w)),
    ]
    if w >= 2:
        out.append(Check("eps!/eta* data [kleisli-maybe]", lambda: _counit_data(Ps[1])))
    for F in Fs:
        out.append(Check(f"eta! iso [{F.name}]", lambda F=F: _iso_pair(adj.eta_cayley(F), adj.eta_cayley_inv(F),
                                                                      fpts, f"eta![{F.name}]")))
        out.append(Check(f"eps* iso [{F.name}]", lambda F=F: _iso_pair(adj.epsilon_kleisli(F),
                                                                      adj.epsilon_kleisli_inv(F), fpts,
                                                                      f"eps*[{F.name}]")))
        out.append(Check(f"naturality [eta! {F.name}]", lambda F=F: functors.check_naturality(adj.eta_cayley(F), w)))
        out.append(Check(f"naturality [eps* {F.name}]",
                         lambda F=F: functors.check_naturality(adj.epsilon_kleisli(F), w)))
    for P in _profunctors(cfg):
        out.append(Check(f"idempotency [{P.name}]", lambda P=P: _idempotency(P, w)))
        out.append(Check(f"strength laws [{P.name}]", lambda P=P: profunctors.check_strength_laws(P, w)))
        out.append(Check(f"strong naturality [eps! {P.name}]",
                         lambda P=P: profunctors.check_strong_naturality(adj.epsilon_cayley(P), w)))
        out.append(Check(f"strong naturality [eta* {P.name}]",
                         lambda P=P: profunctors.check_strong_naturality(adj.eta_kleisli(P), w)))
    return out + _controls("adjunction-triangles", "two-sided-inverse")


def _force_eval(A, w) -> Report:
    r = Report(f"force/eval [{A.name}]")
    pts = monoidal.window_points(monoidal.MonoidalTag.BENABOU, w)
    f, e = eq.force_via_combinators(A), adj.epsilon_cayley(A.carrier)
    g, h = eq.eval_via_combinators(A), adj.eta_kleisli(A.carrier)
    for pt in pts:
        r.check(f.component(pt).table == e.component(pt).table, lambda: f"force != eps! at {pt}")
        r.check(g.component(pt).table == h.component(pt).table, lambda: f"eval != eta* at {pt}")
    return r


def _lave(A, expected: bool, point=(2, 2)) -> Report:
    r = Report(f"lave [{A.name}]")
    found = eq.lave_witness(A, point) is not None
    r.check(found == expected, lambda: f"lave witness {'found' if found else 'absent'} at {point}")
    comp = eq.eval_via_combinators(A).component(point)
    r.note(f"eval at {point}: {comp.dom.card} -> {comp.cod.card}")
    return r


def _oplax_rejects(name, K) -> Report:
    r = Report(f"oplax lift rejects [{name}]")
    try:
        eq.arrow_to_monad(eq.t_monoid(monoids.library_monoid(name, K), "diamond"))
    except eq.NotInvertibleError as e:
        r.check(True, "")
        r.note(str(e))
        return r
    r.check(False, f"{name} was accepted as a diamond-monoid")
    return r


def _identity_mate(w, K) -> Report:
    from .nat import Nat

    r = Report("identity mate")
    ident = adj.AdjunctionRep("identity", lambda A: A, lambda A: A, lambda t: t, lambda t: t,
                              lambda A: Nat(A, A, lambda p, x: x, name="id"),
                              lambda A: Nat(A, A, lambda p, x: x, name="id"), False)
    S = eq.identity_structure("day", K)
    mate = eq.doctrinal_mate(ident, S)
    M = functors.maybe()
    T = monoidal.tensor("day", M, M, K)
    for X in range(w + 1):
        for x in range(T.card(X)):
            r.check(mate.gamma(M, M)(X, x) == x, lambda: f"mate moves element {x} at {X}")
        r.check(mate.gamma0()(X, 0) == 0 if X else True, "unit component moved")
    return r


def _hat_phi_direct(P, Q, w, K) -> Report:
    r = Report(f"closed-form hat phi [{P.name}, {Q.name}]")
    mate = eq.hat_opmonoidal_structure(K).gamma(P, Q)
    direct = eq.hat_phi_direct(P, Q, K)
    for Z in range(w + 1):
        r.check(mate.component(Z).table == direct.component(Z).table, lambda: f"differs at Z={Z}")
    return r


def equivalences_suite(cfg: Config):
    w, K = cfg.max_obj, cfg.coend_bound
    M, R = functors.maybe(), functors.reader(2)
    KM = profunctors.library_profunctor("kleisli-maybe")
    CM = profunctors.library_profunctor("cayley-maybe")
    cs = lambda: eq.cayley_monoidal_structure(K)
    ks = lambda: eq.kleisli_monoidal_structure(K)
    lib = lambda n: monoids.library_monoid(n, K)
    pts = monoidal.window_points(monoidal.MonoidalTag.BENABOU, w)
    out = [
        Check("cayley strong [phi, phi0]", lambda: eq.check_structure_bijective(cs(), [(M, M), (M, R)], w)),
        Check("cayley phi inverse [maybe, maybe]",
              lambda: monoidal.check_iso_pair(eq.cayley_phi(M, M, K), eq.cayley_phi_inv(M, M, K), pts)),
        Check("coherence [cayley]", lambda: eq.check_monoidal_coherence(cs(), [M], w)),
        Check("coherence [kleisli]", lambda: eq.check_monoidal_coherence(ks(), [M], w)),
        Check("coherence [hat, monoidal mate]", lambda: eq.check_monoidal_coherence(eq.hat_monoidal_structure(K), [KM], w)),
        Check("coherence [hat, opmonoidal mate]",
              lambda: eq.check_monoidal_coherence(eq.hat_opmonoidal_structure(K), [KM], w)),
        Check("colax-lax [kleisli]", lambda: eq.check_colax_lax(adj.kleisli_adjunction(), eq.hat_opmonoidal_structure(K),
                                                                ks(), [KM, CM], w)),
        Check("closed-form hat phi [kleisli-maybe, cayley-maybe]", lambda: _hat_phi_direct(KM, CM, w, K)),
        Check("xi non-surjectivity search", lambda: eq.xi_surjectivity_search(window=w, bound=K)),
        Check("identity mate", lambda: _identity_mate(w, K)),
        Check("monoidal transformation [eta! cayley]",
              lambda: eq.check_monoidal_nat_trans(adj.eta_cayley, eq.identity_structure("day", K),
                                                  eq.composite_structure(cs(), eq.hat_monoidal_structure(K)), [M], w,
                                                  name="eta!")),
        Check("monoidal transformation [eps! cayley]",
              lambda: eq.check_monoidal_nat_trans(adj.epsilon_cayley,
                                                  eq.composite_structure(eq.hat_monoidal_structure(K), cs()),
                                                  eq.identity_structure("benabou", K), [KM, profunctors.hom_prof()], w,
                                                  name="eps!")),
        Check("hat xi invertibility", lambda: eq.hat_xi_invertibility(window=w, bound=K)),
        Check("lift [maybe-idiom] = static-maybe-arrow",
              lambda: eq.compare_monoids(eq.lift_monoid(cs(), lib("maybe-idiom")), lib("static-maybe-arrow"), w)),
        Check("lift [maybe-monad] = kleisli-maybe-arrow",
              lambda: eq.compare_monoids(eq.lift_monoid(ks(), lib("maybe-monad")), lib("kleisli-maybe-arrow"), w)),
        Check("oplax lift [kleisli-maybe-arrow] = maybe-monad",
              lambda: eq.compare_monoids(eq.arrow_to_monad(eq.t_monoid(lib("kleisli-maybe-arrow"), "diamond")),
                                         lib("maybe-monad"), w)),
        Check("oplax lift [hom-arrow] = trivial monad",
              lambda: eq.compare_monoids(eq.arrow_to_monad(eq.t_monoid(lib("hom-arrow"), "diamond")),
                                         monoids.trivial_monoid("subst", K), w)),
        Check("oplax lift rejects [static-writer-or2-arrow]", lambda: _oplax_rejects("static-writer-or2-arrow", K)),
        Check("box round trip [static-maybe-arrow]", lambda: eq.box_round_trip(lib("static-maybe-arrow"), w)),
        Check("diamond round trip [kleisli-maybe-arrow]", lambda: eq.diamond_round_trip(lib("kleisli-maybe-arrow"), w)),
    ]
    for name in ("maybe-idiom", "reader2-idiom", "writer-or2-idiom"):
        out.append(Check(f"idiom round trip [{name}]",
                         lambda name=name: eq.idiom_round_trip(lib(name), w, arrow_window=min(w, 1) if "reader" in name else None)))
    out.append(Check("idiom round trip [trivial]", lambda: eq.idiom_round_trip(monoids.trivial_monoid("day", K), w)))
    for name in ("maybe-monad", "reader2-monad", "writer-or2-monad"):
        out.append(Check(f"monad round trip [{name}]",
                         lambda name=name: eq.monad_round_trip(lib(name), w, arrow_window=min(w, 1) if "reader" in name else None)))
    out.append(Check("monad round trip [trivial]", lambda: eq.monad_round_trip(monoids.trivial_monoid("subst", K), w)))
    for name in monoids.monoid_names():
        if not name.endswith("arrow"):
            continue
        out.append(Check(f"force/eval [{name}]", lambda name=name: _force_eval(lib(name), w)))
        out.append(Check(f"box-image criterion [{name}]", lambda name=name: eq.box_image_criterion(lib(name), w)))
    if w >= 2:
        out.append(Check("lave [kleisli-maybe-arrow]", lambda: _lave(lib("kleisli-maybe-arrow"), True)))
        out.append(Check("lave [static-maybe-arrow]", lambda: _lave(lib("static-maybe-arrow"), False)))
    return out + _controls("monoidal-coherence", "monoidal-transformation", "colax-lax")


SUITES = {
    "finset": finset_suite,
    "functors": functors_suite,
    "coends": coends_suite,
    "profunctors": profunctors_suite,
    "monoids": monoids_suite,
    "adjunctions": adjunctions_suite,
    "monoidal": monoidal_suite,
    "equivalences": equivalences_suite,
}


def suite_names() -> list:
    return list(SUITES) + ["all"]


def build(suite: str, cfg: Config) -> list:
    if suite == "all":
        return [Check(f"{s}/{c.name}", c.thunk, c.expected_failure) for s in SUITES for c in build(s, cfg)]
    if suite not in SUITES:
        raise UnknownNameError(f"unknown suite {suite!r}; choose from {', '.join(suite_names())}")
    return [Check(f"{suite}/{c.name}", c.thunk, c.expected_failure) for c in SUITES[suite](cfg)]


def _run_one(check: Check) -> CheckResult:
    t0 = time.perf_counter()
    try:
        report = check.thunk()
        status = "pass" if report.ok else "fail"
        if report.ok:
            cex = next((n for n in report.notes if n.startswith("expected failure")), None)
        else:
            cex = report.counterexample
    except CoendSizeError as e:
        status, cex = "fail", f"resource cap exceeded in {check.name}: {e}"
    except ArrowlabError as e:
        status, cex = "fail", f"{type(e).__name__} in {check.name}: {e}"
    except Exception as e:  # a crash is reported as a failure of this check only
        status, cex = "fail", f"unexpected {type(e).__name__} in {check.name}: {e}"
    elapsed = int((time.perf_counter() - t0) * 1000)
    return CheckResult(check.name, status, cex, elapsed)


def run(suite: str, cfg: Config = None, progress: Callable[[CheckResult], None] = None) -> SuiteReport:
    cfg = cfg or Config()
    if cfg.inject_fault is not None and cfg.inject_fault not in FAULTS:
        raise UnknownNameError(f"unknown fault {cfg.inject_fault!r}; choose from {', '.join(FAULTS)}")
    checks = sorted(build(suite, cfg), key=lambda c: c.name)
    results, failed = [], False
    for c in checks:
        if failed and cfg.fail_fast:
            results.append(CheckResult(c.name, "skipped"))
            continue
        res = _run_one(c)
        failed = failed or res.status == "fail"
        results.append(res)
        if progress:
            progress(res)
    return SuiteReport(suite, cfg, results)
