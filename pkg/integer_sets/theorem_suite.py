"""
🧪 Suites de Vérification des Implications
==========================================

Suites nommées qui confrontent, sur des instances aléatoires reproductibles,
les tests décidables entre eux: lois des opérations, lois des opérateurs de
fermeture, caractérisations des classes de représentabilité, hiérarchie 2-D,
famille f^(k), propriétés liées à la 2-décomposabilité, invariances par
réflexion et translation, et aller-retour système/solutions.

Chaque suite renvoie un SuiteOutcome listant les violations (ensemble fautif
et implication violée). Une option de mutation remplace μ par une variante
fautive pour s'assurer que les suites détectent l'erreur.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence

import numpy as np
import pandas as pd

from config import SUITE_DEFAULTS

from .closure_engine import class_closure, closure_under, tvpi_closure, utvpi_closure
from .convexity import is_hole_free, is_integrally_convex, is_midpoint_neighbor_closed
from .core_types import Point, PointSet
from .decomposition import hereditary_check, is_2_decomposable, is_weakly_F_closed, join_of_closures
from .errors import IntegerSetError, UnknownNameError
from .joins import join, pairwise_projections
from .lattice import Box
from .operations import (CEIL_MID, FLOOR_MID, MAJ_P, MEDIAN, MU, MU_CEIL_MUTANT, CoordinateFamily, TotalOp,
                         fk_eval, fk_pairs, floor_mid, ceil_mid, is_closed, is_closed_family,
                         is_closed_under_all, is_strongly_closed, is_weakly_closed, maj_p_eval, median_op)
from .oracle import closed_random_set, naive_closure, random_box, random_set, random_utvpi_system
from .representation import integer_solutions, is_representable, synthesize_system

logger = logging.getLogger(__name__)

MUTATIONS = {'mu-ceil': MU_CEIL_MUTANT}


@dataclass
class SuiteViolation:
    """Implication violée sur un ensemble donné"""
    rule: str
    points: List[List[int]]
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {'rule': self.rule, 'points': self.points, 'detail': self.detail}


@dataclass
class SuiteOutcome:
    """Résultat d'une suite: essais, violations, erreurs de budget"""
    name: str
    trials: int = 0
    violations: List[SuiteViolation] = field(default_factory=list)
    errors: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'trials': self.trials,
            'passed': self.passed,
            'violations': [v.to_dict() for v in self.violations],
            'errors': list(self.errors),
            'notes': list(self.notes),
            'elapsed': round(self.elapsed, 3),
        }


class TheoremVerifier:
    """Exécute les suites de vérification sur des instances aléatoires"""

    MAX_RECORDED_VIOLATIONS = 20

    def __init__(self, seed: int = SUITE_DEFAULTS['seed'], trials: int = SUITE_DEFAULTS['trials'],
                 mutate: Optional[str] = None):
        """
        Args:
            seed: Graine de toutes les instances aléatoires
            trials: Nombre d'instances par suite (>= 1)
            mutate: Nom de mutation ("mu-ceil") ou None
        """
        if trials < 1:
            raise IntegerSetError("Le nombre d'essais doit être >= 1")
        if mutate is not None and mutate not in MUTATIONS:
            raise UnknownNameError(f"Mutation inconnue: {mutate} (attendu: {', '.join(MUTATIONS)})")
        self.seed = seed
        self.trials = trials
        self.mutate = mutate
        self.mu: TotalOp = MUTATIONS[mutate] if mutate else MU

        self.suites: Dict[str, Callable[[SuiteOutcome], None]] = {
            'operation-laws': self._operation_laws,
            'closure-laws': self._closure_laws,
            'projections': self._projections,
            'median-mu-utvpi': self._median_mu_utvpi,
            'characterization': self._characterization,
            'intconv-decomposition': self._intconv_decomposition,
            'mu-utvpi-2d': self._mu_utvpi_2d,
            'f-family': self._f_family,
            'related-properties': self._related_properties,
            'hierarchy-2d': self._hierarchy_2d,
            'metamorphic': self._metamorphic,
            'utvpi-systems': self._utvpi_systems,
            'round-trip': self._round_trip,
        }

    # ------------------------------------------------------------------
    # Exécution
    # ------------------------------------------------------------------

    def run(self, names: Optional[Sequence[str]] = None) -> List[SuiteOutcome]:
        """Exécute les suites demandées (toutes par défaut), dans l'ordre de déclaration"""
        names = list(self.suites) if not names else list(names)
        unknown = [n for n in names if n not in self.suites]
        if unknown:
            raise UnknownNameError(f"Suite(s) inconnue(s): {unknown} (attendu: {', '.join(self.suites)})")
        return [self.run_suite(name) for name in names]

    def run_suite(self, name: str) -> SuiteOutcome:
        outcome = SuiteOutcome(name)
        logger.info(f"🧪 Suite '{name}' ({self.trials} essais)")
        start = time.time()
        self.suites[name](outcome)
        outcome.elapsed = time.time() - start
        if outcome.passed:
            logger.info(f"✅ Suite '{name}': {outcome.trials} instance(s), aucune violation ({outcome.elapsed:.2f}s)")
        else:
            logger.warning(f"⚠️ Suite '{name}': {len(outcome.violations)} violation(s)")
        return outcome

    @staticmethod
    def to_frame(outcomes: Sequence[SuiteOutcome]) -> pd.DataFrame:
        return pd.DataFrame([
            {
                'suite': o.name,
                'essais': o.trials,
                'violations': len(o.violations),
                'erreurs': len(o.errors),
                'statut': 'PASS' if o.passed else 'FAIL',
                'duree_s': round(o.elapsed, 3),
            }
            for o in outcomes
        ], columns=['suite', 'essais', 'violations', 'erreurs', 'statut', 'duree_s'])

    # ------------------------------------------------------------------
    # Outils
    # ------------------------------------------------------------------

    def _rng(self, name: str) -> np.random.Generator:
        offset = list(self.suites).index(name) if name in self.suites else 0
        return np.random.default_rng([self.seed, offset])

    def _random_sets(self, rng: np.random.Generator, count: int, dims: Sequence[int], side: int,
                     max_size: int, low: int = 0) -> Iterator[PointSet]:
        for _ in range(count):
            dim = int(rng.choice(dims))
            box = random_box(dim, side, low)
            size = int(rng.integers(1, min(max_size, box.volume()) + 1))
            yield random_set(dim, box, size, int(rng.integers(0, 2 ** 31)))

    @staticmethod
    def _expect(outcome: SuiteOutcome, condition: bool, rule: str, point_set: Optional[PointSet] = None,
                detail: str = ''):
        if condition:
            return
        if len(outcome.violations) < TheoremVerifier.MAX_RECORDED_VIOLATIONS:
            rows = point_set.to_rows() if point_set is not None else []
            outcome.violations.append(SuiteViolation(rule, rows, detail))
        else:
            outcome.violations.append(SuiteViolation(rule, [], 'non détaillée'))

    def _guarded(self, outcome: SuiteOutcome, point_set: PointSet, body: Callable[[PointSet], None]):
        outcome.trials += 1
        try:
            body(point_set)
        except IntegerSetError as e:
            logger.debug(f"Instance ignorée ({outcome.name}): {e}")
            outcome.errors.append(str(e))

    def _mu_closed(self, point_set: PointSet) -> bool:
        return is_closed(point_set, self.mu).holds

    # ------------------------------------------------------------------
    # Suites
    # ------------------------------------------------------------------

    def _operation_laws(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        mu = self.mu
        for _ in range(self.trials):
            outcome.trials += 1
            x, y, z = (int(v) for v in rng.integers(-50, 51, size=3))
            self._expect(outcome, mu(x, y) + mu(y, x) == x + y, "μ(x,y) + μ(y,x) = x + y", detail=f"{x},{y}")
            self._expect(outcome, min(x, y) <= mu(x, y) <= max(x, y), "min <= μ <= max", detail=f"{x},{y}")
            self._expect(outcome, floor_mid(x, y) <= mu(x, y) <= ceil_mid(x, y), "h <= μ <= g", detail=f"{x},{y}")
            self._expect(outcome, mu(x, x) == x, "μ(x,x) = x", detail=f"{x}")
            majority = median_op(x, x, y) == median_op(x, y, x) == median_op(y, x, x) == x
            self._expect(outcome, majority, "median est une majorité", detail=f"{x},{y}")
            partial = maj_p_eval(x, y, z)
            self._expect(outcome, partial is None or partial == median_op(x, y, z),
                         "maj_p coïncide avec median là où elle est définie", detail=f"{x},{y},{z}")
            k = int(rng.integers(2, 6))
            center = int(rng.integers(1, k + 1))
            d = int(rng.integers(-5, 6))
            args = {}
            for pair in fk_pairs(k):
                on_star = center in pair.as_tuple()
                args[pair] = d if on_star else int(rng.integers(-20, 21))
            self._expect(outcome, fk_eval(k, args) == d, "f^(k) constante sur une étoile", detail=f"k={k}")

    def _closure_laws(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        op_kinds = {'op:mu': (self.mu,), 'op:median': (MEDIAN,), 'op:gh': (CEIL_MID, FLOOR_MID)}
        class_kinds = ['svpi', 'dc', 'utvpi', 'tvpi']

        def body(s: PointSet):
            subset = PointSet(s.dim, frozenset(s.ordered[: max(1, len(s) // 2)]))
            box = Box.of_set(s)
            closures = {}
            for kind, ops in op_kinds.items():
                closed = closure_under(s, ops).closed_set
                closures[kind] = closed
                self._expect(outcome, s.issubset(closed), f"{kind} extensive", s)
                self._expect(outcome, closure_under(closed, ops).closed_set == closed, f"{kind} idempotente", s)
                self._expect(outcome, closure_under(subset, ops).closed_set.issubset(closed), f"{kind} monotone", s)
                self._expect(outcome, naive_closure(s, ops, box) == closed, f"{kind} = oracle naïf", s)
            for kind in class_kinds:
                closed = class_closure(s, kind)
                closures[kind] = closed
                self._expect(outcome, s.issubset(closed), f"{kind} extensive", s)
                self._expect(outcome, class_closure(closed, kind) == closed, f"{kind} idempotente", s)
                self._expect(outcome, class_closure(subset, kind).issubset(closed), f"{kind} monotone", s)
            chain = ['svpi', 'dc', 'utvpi', 'tvpi']
            for wide, narrow in zip(chain, chain[1:]):
                self._expect(outcome, closures[narrow].issubset(closures[wide]), f"{narrow} ⊆ {wide}", s)
            self._expect(outcome, closures['op:mu'].issubset(closures['utvpi']), "cl_μ ⊆ cl_UTVPI", s)

        for s in self._random_sets(rng, self.trials, [2], side=5, max_size=5):
            self._guarded(outcome, s, body)
        for s in self._random_sets(rng, max(1, self.trials // 4), [3], side=3, max_size=4):
            self._guarded(outcome, s, body)

    def _projections(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        ops = [MEDIAN, self.mu, CEIL_MID, FLOOR_MID]

        def body(s: PointSet):
            op = ops[int(rng.integers(0, len(ops)))]
            closed = closure_under(s, (op,)).closed_set
            for pair, part in pairwise_projections(closed).items():
                self._expect(outcome, is_closed(part, op).holds, f"projection {pair} {op.name}-fermée", closed)
            parts = {pair: closure_under(part, (op,)).closed_set for pair, part in pairwise_projections(s).items()}
            joined = join(parts, s.dim)
            self._expect(outcome, is_closed(joined, op).holds, f"jointure de parties {op.name}-fermées", s)

        for s in self._random_sets(rng, self.trials, [3], side=4, max_size=4):
            self._guarded(outcome, s, body)

    def _median_mu_utvpi(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            utvpi = is_representable(s, 'utvpi').representable
            closed = is_closed(s, MEDIAN).holds and self._mu_closed(s)
            self._expect(outcome, utvpi == closed, "UTVPI ⇔ median-fermé ∧ μ-fermé", s,
                         f"utvpi={utvpi}, median∧μ={closed}")

        for s in self._random_sets(rng, self.trials, SUITE_DEFAULTS['dims'], side=6,
                                   max_size=SUITE_DEFAULTS['max_set_size']):
            self._guarded(outcome, s, body)
        for _ in range(self.trials):
            dim = int(rng.choice(SUITE_DEFAULTS['dims']))
            side = 5 if dim == 2 else 4
            size = int(rng.integers(1, 5))
            seed = int(rng.integers(0, 2 ** 31))
            try:
                s = closed_random_set(dim, random_box(dim, side), size, seed, (MEDIAN, MU))
            except IntegerSetError as e:
                outcome.errors.append(str(e))
                continue
            self._guarded(outcome, s, body)

    def _characterization(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            svpi = is_representable(s, 'svpi').representable
            dc = is_representable(s, 'dc').representable
            utvpi = is_representable(s, 'utvpi').representable
            tvpi = is_representable(s, 'tvpi').representable
            median = is_closed(s, MEDIAN).holds
            self._expect(outcome, svpi == is_midpoint_neighbor_closed(s).holds, "SVPI ⇔ voisinage des milieux", s)
            gh = is_closed_under_all(s, (CEIL_MID, FLOOR_MID)).holds
            self._expect(outcome, dc == gh, "DC ⇔ (g,h)-fermé", s)
            self._expect(outcome, tvpi == (tvpi_closure(s) == s), "TVPI ⇔ S = fermeture TVPI", s)
            if s.dim >= 2:
                self._expect(outcome, dc == (join_of_closures(s, 'gh') == s), "DC ⇔ jointure cl_{g,h}", s)
                self._expect(outcome, utvpi == (join_of_closures(s, 'mu', mu=self.mu) == s), "UTVPI ⇔ jointure cl_μ", s)
                self._expect(outcome, median == (join_of_closures(s, 'median') == s), "median ⇔ jointure cl_median", s)
                self._expect(outcome, tvpi == (join_of_closures(s, 'hull') == s), "TVPI ⇔ jointure des enveloppes", s)

        for s in self._random_sets(rng, self.trials, SUITE_DEFAULTS['dims'], side=6,
                                   max_size=SUITE_DEFAULTS['max_set_size']):
            self._guarded(outcome, s, body)
        for _ in range(max(1, self.trials // 2)):
            dim = int(rng.choice(SUITE_DEFAULTS['dims']))
            s = closed_random_set(dim, random_box(dim, 5 if dim == 2 else 4), int(rng.integers(1, 5)),
                                  int(rng.integers(0, 2 ** 31)), (CEIL_MID, FLOOR_MID))
            self._guarded(outcome, s, lambda t: self._expect(
                outcome, is_representable(t, 'dc').representable, "cl_{g,h} est DC-représentable", t))

    def _intconv_decomposition(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            utvpi = is_representable(s, 'utvpi').representable
            convex = is_integrally_convex(s).holds
            decomposable = is_2_decomposable(s).decomposable
            self._expect(outcome, utvpi == (convex and decomposable), "UTVPI ⇔ intégralement convexe ∧ 2-décomposable", s)
            if self._mu_closed(s):
                self._expect(outcome, convex, "μ-fermé ⇒ intégralement convexe", s)
            if is_representable(s, 'tvpi').representable:
                self._expect(outcome, is_closed(s, MEDIAN).holds, "TVPI ⇒ median-fermé", s)
                self._expect(outcome, is_hole_free(s).holds, "TVPI ⇒ sans trou", s)

        for s in self._random_sets(rng, self.trials, SUITE_DEFAULTS['dims'], side=5, max_size=8):
            self._guarded(outcome, s, body)

    def _mu_utvpi_2d(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        box = Box(Point((-6, -6)), Point((6, 6)))
        for size in (2, 3):
            for _ in range(self.trials):
                s = random_set(2, box, size, int(rng.integers(0, 2 ** 31)))
                self._guarded(outcome, s, lambda t: self._expect(
                    outcome, closure_under(t, (self.mu,)).closed_set == utvpi_closure(t),
                    f"cl_μ = cl_UTVPI sur {size} points", t))

    def _f_family(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            decomposable = is_2_decomposable(s).decomposable
            f_closed = is_weakly_F_closed(s, s.dim).holds
            self._expect(outcome, decomposable == f_closed, "2-décomposable ⇔ faiblement F-fermé (k_max = n)", s)

        for s in self._random_sets(rng, self.trials, [3], side=3, max_size=SUITE_DEFAULTS['f_family_max_size']):
            self._guarded(outcome, s, body)

    def _related_properties(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            median = is_closed(s, MEDIAN).holds
            family = is_closed_family(s, CoordinateFamily.uniform(MEDIAN, s.dim)).holds
            strong = is_strongly_closed(s, MAJ_P).holds
            decomposable = is_2_decomposable(s).decomposable
            weak = is_weakly_closed(s, MAJ_P).holds
            chain = [('median', median), ('famille', family), ('fort maj_p', strong),
                     ('2-décomposable', decomposable), ('faible maj_p', weak)]
            for (a, va), (b, vb) in zip(chain, chain[1:]):
                self._expect(outcome, not va or vb, f"{a} ⇒ {b}", s)
            hereditary = {p: hereditary_check(s, p).holds for p in ('strong-maj-p', '2-decomposable', 'weak-maj-p')}
            self._expect(outcome, len(set(hereditary.values())) == 1, "versions héréditaires équivalentes", s,
                         str(hereditary))

        for s in self._random_sets(rng, self.trials, [3, 4], side=3, max_size=6):
            self._guarded(outcome, s, body)

    def _hierarchy_2d(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        strict = {'median-fermé sans être sans trou': False, 'sans trou sans être intégralement convexe': False}

        def body(s: PointSet):
            mnc = is_midpoint_neighbor_closed(s).holds
            gh = is_closed_under_all(s, (CEIL_MID, FLOOR_MID)).holds
            mu = self._mu_closed(s)
            convex = is_integrally_convex(s).holds
            hole_free = is_hole_free(s).holds
            median = is_closed(s, MEDIAN).holds
            utvpi = is_representable(s, 'utvpi').representable
            self._expect(outcome, not mnc or gh, "voisinage des milieux ⇒ (g,h)", s)
            self._expect(outcome, not gh or mu, "(g,h) ⇒ μ", s)
            self._expect(outcome, mu == convex, "μ ⇔ intégralement convexe (n=2)", s)
            self._expect(outcome, not convex or hole_free, "intégralement convexe ⇒ sans trou (n=2)", s)
            self._expect(outcome, not hole_free or median, "sans trou ⇒ median (n=2)", s)
            self._expect(outcome, convex == utvpi, "intégralement convexe ⇔ UTVPI (n=2)", s)
            if median and not hole_free:
                strict['median-fermé sans être sans trou'] = True
            if hole_free and not convex:
                strict['sans trou sans être intégralement convexe'] = True

        for s in self._random_sets(rng, self.trials * 3, [2], side=6, max_size=SUITE_DEFAULTS['max_set_size']):
            self._guarded(outcome, s, body)
        for label, found in strict.items():
            if found:
                outcome.notes.append(f"témoin de stricte inclusion trouvé: {label}")
            else:
                outcome.notes.append(f"aucun témoin aléatoire: {label} (voir les exemples de référence)")

    def _metamorphic(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def verdicts(s: PointSet) -> Dict[str, bool]:
            return {
                'mu-closed': self._mu_closed(s),
                'integrally-convex': is_integrally_convex(s).holds,
                'repr-utvpi': is_representable(s, 'utvpi').representable,
            }

        def body(s: PointSet):
            reference = verdicts(s)
            shift = [int(v) for v in rng.integers(-7, 8, size=s.dim)]
            transforms = {
                'translation': s.translate(shift),
                'réflexion x_1': s.negate_coordinate(1),
                f'réflexion x_{s.dim}': s.negate_coordinate(s.dim),
                'échange x_1/x_2': s.swap_coordinates(1, 2),
            }
            if s.dim == 2:
                transforms['réflexion x_1 = -x_2'] = s.reflect_anti_diagonal()
            for label, image in transforms.items():
                self._expect(outcome, verdicts(image) == reference, f"invariance par {label}", s)

        for s in self._random_sets(rng, self.trials, SUITE_DEFAULTS['dims'], side=5, max_size=8, low=-2):
            self._guarded(outcome, s, body)

    def _utvpi_systems(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)
        for _ in range(self.trials):
            dim = int(rng.choice([1, 2, 3]))
            box = random_box(dim, 5)
            system = random_utvpi_system(dim, box, int(rng.integers(1, 5)), int(rng.integers(0, 2 ** 31)))
            solutions = integer_solutions(system, box)
            if solutions.is_empty():
                outcome.trials += 1
                continue

            def body(s: PointSet):
                self._expect(outcome, self._mu_closed(s), "solutions UTVPI μ-fermées", s)
                self._expect(outcome, is_closed(s, MEDIAN).holds, "solutions UTVPI median-fermées", s)
                self._expect(outcome, is_representable(s, 'utvpi').representable, "solutions UTVPI représentables", s)

            self._guarded(outcome, solutions, body)

    def _round_trip(self, outcome: SuiteOutcome):
        rng = self._rng(outcome.name)

        def body(s: PointSet):
            padded = Box.of_set(s).padded(1)
            for cls in ('svpi', 'dc', 'utvpi', 'tvpi'):
                solutions = integer_solutions(synthesize_system(s, cls), padded)
                self._expect(outcome, solutions == class_closure(s, cls), f"aller-retour {cls.upper()}", s)

        for s in self._random_sets(rng, self.trials, SUITE_DEFAULTS['dims'], side=5, max_size=6):
            self._guarded(outcome, s, body)


def run_suites(seed: int = SUITE_DEFAULTS['seed'], trials: int = SUITE_DEFAULTS['trials'],
               names: Optional[Sequence[str]] = None, mutate: Optional[str] = None) -> List[SuiteOutcome]:
    """Raccourci: exécute les suites demandées avec un vérificateur neuf"""
    return TheoremVerifier(seed=seed, trials=trials, mutate=mutate).run(names)


SUITE_NAMES = list(TheoremVerifier().suites)
