"""
🔍 Classificateur - Profil Complet d'un Ensemble
================================================

Exécute tous les tests décidables sur un ensemble, attache les certificats
et vérifie les implications connues entre propriétés. Toute implication
violée est consignée dans la liste de cohérence, qui doit rester vide.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from config import SCHEMA_VERSIONS

from .core_types import PointSet, require_nonempty
from .convexity import is_hole_free, is_integrally_convex, is_midpoint_neighbor_closed
from .decomposition import is_2_decomposable, join_of_closures
from .errors import IntegerSetError
from .operations import (CEIL_MID, FLOOR_MID, MAJ_P, MEDIAN, MU, CoordinateFamily, TotalOp, is_closed,
                         is_closed_family, is_closed_under_all, is_strongly_closed, is_weakly_closed)
from .representation import is_representable

logger = logging.getLogger(__name__)

# Ordre d'affichage des propriétés
PROPERTY_ORDER = [
    'midpoint-neighbor', 'gh-closed', 'mu-closed', 'integrally-convex', 'hole-free',
    'median-closed', 'family-median', 'strong-maj-p', '2-decomposable', 'weak-maj-p',
    'repr-svpi', 'repr-dc', 'repr-utvpi', 'repr-tvpi',
    'join-gh', 'join-mu', 'join-median', 'join-hull',
]

NOTES = [
    "La fermeture sous une opération de majorité quelconque n'est pas décidable ici: "
    "le profil expose median-closed et les jointures de fermetures équivalentes.",
]


@dataclass(frozen=True)
class Implication:
    """Prémisses (conjonction) => conclusion, éventuellement restreinte à une dimension ou à {0,1}^n"""
    premises: Tuple[str, ...]
    conclusion: str
    only_dim: Optional[int] = None
    binary_only: bool = False

    @property
    def label(self) -> str:
        scope = f" (n={self.only_dim})" if self.only_dim else (" ({0,1}^n)" if self.binary_only else "")
        return f"{' ∧ '.join(self.premises)} ⇒ {self.conclusion}{scope}"


def _equiv(a: Sequence[str], b: str, **scope) -> List[Implication]:
    rules = [Implication(tuple(a), b, **scope)]
    rules += [Implication((b,), premise, **scope) for premise in a]
    return rules


def _chain(*names: str, **scope) -> List[Implication]:
    return [Implication((a,), b, **scope) for a, b in zip(names, names[1:])]


IMPLICATIONS: List[Implication] = (
    _equiv(['midpoint-neighbor'], 'repr-svpi')
    + _equiv(['gh-closed'], 'repr-dc')
    + _equiv(['median-closed', 'mu-closed'], 'repr-utvpi')
    + _equiv(['integrally-convex', '2-decomposable'], 'repr-utvpi')
    + _chain('repr-svpi', 'repr-dc', 'repr-utvpi', 'repr-tvpi', 'median-closed')
    + _chain('midpoint-neighbor', 'gh-closed', 'mu-closed', 'integrally-convex')
    + [Implication(('repr-tvpi',), 'hole-free')]
    + _chain('median-closed', 'family-median', 'strong-maj-p', '2-decomposable', 'weak-maj-p')
    + _equiv(['join-gh'], 'repr-dc')
    + _equiv(['join-mu'], 'repr-utvpi')
    + _equiv(['join-median'], 'median-closed')
    + _equiv(['join-hull'], 'repr-tvpi')
    + _equiv(['mu-closed'], 'integrally-convex', only_dim=2)
    + _chain('integrally-convex', 'hole-free', 'median-closed', only_dim=2)
    + _equiv(['integrally-convex'], 'repr-utvpi', only_dim=2)
    + _equiv(['repr-utvpi'], 'repr-tvpi', binary_only=True)
    + _equiv(['repr-tvpi'], 'median-closed', binary_only=True)
)

# Propriétés vraies sur tout sous-ensemble de {0,1}^n
BINARY_FACTS = ('mu-closed', 'integrally-convex')


@dataclass
class ClassReport:
    """Profil complet: verdicts, certificats, cohérence des implications"""
    dim: int
    size: int
    verdicts: Dict[str, Optional[bool]] = field(default_factory=dict)
    certificates: Dict[str, Any] = field(default_factory=dict)
    consistency: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    errors: Dict[str, str] = field(default_factory=dict)
    metadata: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convertit le rapport en dictionnaire"""
        return {
            'schema': SCHEMA_VERSIONS['class_report'],
            'dim': self.dim,
            'size': self.size,
            'verdicts': dict(self.verdicts),
            'certificates': dict(self.certificates),
            'consistency': list(self.consistency),
            'notes': list(self.notes),
            'errors': dict(self.errors),
            'metadata': dict(self.metadata),
        }

    def to_frame(self) -> pd.DataFrame:
        """Une ligne par propriété: verdict et résumé du certificat"""
        rows = []
        for name in PROPERTY_ORDER:
            if name not in self.verdicts:
                continue
            verdict = self.verdicts[name]
            rows.append({
                'propriete': name,
                'verdict': 'n/a' if verdict is None else ('oui' if verdict else 'non'),
                'certificat': _summarize(self.certificates.get(name)),
                'erreur': self.errors.get(name, ''),
            })
        return pd.DataFrame(rows, columns=['propriete', 'verdict', 'certificat', 'erreur'])


def _summarize(certificate: Any) -> str:
    if certificate is None:
        return ''
    if isinstance(certificate, dict):
        if certificate.get('hole') is not None:
            return f"trou {tuple(certificate['hole'])}"
        if certificate.get('missing_point') is not None:
            return f"manquant {tuple(certificate['missing_point'])}"
        if certificate.get('system') is not None:
            return f"{len(certificate['system']['rows'])} inégalité(s)"
        if certificate.get('inputs') is not None:
            produced = certificate.get('produced')
            inputs = ' '.join(str(tuple(p)) for p in certificate['inputs'])
            return f"{inputs} -> {tuple(produced)}" if produced is not None else inputs
        if certificate.get('produced') is not None:
            return f"{tuple(certificate['produced'])}"
    return str(certificate)


def _is_binary(point_set: PointSet) -> bool:
    return all(c in (0, 1) for p in point_set.points for c in p)


class SetClassifier:
    """Classificateur d'ensembles de points entiers"""

    def __init__(self, mu: TotalOp = MU):
        """
        Initialise le classificateur

        Args:
            mu: Opération μ utilisée (remplaçable par un mutant pour les tests de mutation)
        """
        self.mu = mu
        self.checkers: Dict[str, Callable[[PointSet], Tuple[bool, Any]]] = {
            'midpoint-neighbor': lambda s: self._from_check(is_midpoint_neighbor_closed(s)),
            'gh-closed': lambda s: self._from_check(is_closed_under_all(s, (CEIL_MID, FLOOR_MID))),
            'mu-closed': lambda s: self._from_check(is_closed(s, self.mu)),
            'integrally-convex': lambda s: self._from_check(is_integrally_convex(s)),
            'hole-free': lambda s: self._from_check(is_hole_free(s)),
            'median-closed': lambda s: self._from_check(is_closed(s, MEDIAN)),
            'family-median': lambda s: self._from_check(
                is_closed_family(s, CoordinateFamily.uniform(MEDIAN, s.dim))),
            'strong-maj-p': lambda s: self._from_check(is_strongly_closed(s, MAJ_P)),
            '2-decomposable': self._decomposition,
            'weak-maj-p': lambda s: self._from_check(is_weakly_closed(s, MAJ_P)),
            'repr-svpi': lambda s: self._representation(s, 'svpi'),
            'repr-dc': lambda s: self._representation(s, 'dc'),
            'repr-utvpi': lambda s: self._representation(s, 'utvpi'),
            'repr-tvpi': lambda s: self._representation(s, 'tvpi'),
            'join-gh': lambda s: self._join(s, 'gh'),
            'join-mu': lambda s: self._join(s, 'mu'),
            'join-median': lambda s: self._join(s, 'median'),
            'join-hull': lambda s: self._join(s, 'hull'),
        }
        # Propriétés sans objet en dimension 1
        self.needs_two_dims = {'2-decomposable', 'join-gh', 'join-mu', 'join-median', 'join-hull'}

        self.performance_metrics = {
            'total_classifications': 0,
            'consistent_classifications': 0,
            'inconsistencies': 0,
            'check_errors': 0,
            'average_classification_time': 0.0
        }

    @staticmethod
    def _from_check(result) -> Tuple[bool, Any]:
        witness = result.witness.to_dict() if result.witness is not None else None
        return result.holds, witness

    @staticmethod
    def _decomposition(point_set: PointSet) -> Tuple[bool, Any]:
        report = is_2_decomposable(point_set)
        certificate = None if report.decomposable else {'missing_point': report.missing_point.to_list()}
        return report.decomposable, certificate

    @staticmethod
    def _representation(point_set: PointSet, cls: str) -> Tuple[bool, Any]:
        certificate = is_representable(point_set, cls)
        return certificate.representable, certificate.to_dict()

    def _join(self, point_set: PointSet, kind: str) -> Tuple[bool, Any]:
        joined = join_of_closures(point_set, kind, mu=self.mu)
        extra = joined.points - point_set.points
        if extra:
            return False, {'missing_point': min(extra).to_list()}
        return True, None

    def classify(self, point_set: PointSet) -> ClassReport:
        """
        Profil complet d'un ensemble non vide

        Les erreurs de budget d'un test sont consignées dans report.errors
        et le verdict correspondant reste None.
        """
        require_nonempty(point_set, "classify")
        start = time.time()
        self.performance_metrics['total_classifications'] += 1
        report = ClassReport(point_set.dim, len(point_set), notes=list(NOTES))

        for name in PROPERTY_ORDER:
            if name in self.needs_two_dims and point_set.dim < 2:
                report.verdicts[name] = None
                continue
            try:
                holds, certificate = self.checkers[name](point_set)
            except IntegerSetError as e:
                logger.warning(f"⚠️ Test '{name}' interrompu: {e}")
                self.performance_metrics['check_errors'] += 1
                report.verdicts[name] = None
                report.errors[name] = str(e)
                continue
            report.verdicts[name] = holds
            if certificate is not None:
                report.certificates[name] = certificate

        report.consistency = self.check_consistency(point_set, report.verdicts)
        if report.consistency:
            self.performance_metrics['inconsistencies'] += len(report.consistency)
            logger.error(f"❌ Implications violées: {report.consistency}")
        else:
            self.performance_metrics['consistent_classifications'] += 1

        elapsed = time.time() - start
        total = self.performance_metrics['total_classifications']
        self.performance_metrics['average_classification_time'] = (
            (self.performance_metrics['average_classification_time'] * (total - 1) + elapsed) / total
        )
        report.metadata['classification_time'] = round(elapsed, 4)
        report.metadata['binary'] = _is_binary(point_set)
        logger.info(f"✅ Ensemble classé ({len(point_set)} points, dimension {point_set.dim}) en {elapsed:.3f}s")
        return report

    @staticmethod
    def check_consistency(point_set: PointSet, verdicts: Dict[str, Optional[bool]]) -> List[str]:
        """Implications applicables violées par les verdicts (None = non décidé, ignoré)"""
        binary = _is_binary(point_set)
        violated = []
        for rule in IMPLICATIONS:
            if rule.only_dim is not None and point_set.dim != rule.only_dim:
                continue
            if rule.binary_only and not binary:
                continue
            values = [verdicts.get(p) for p in rule.premises]
            conclusion = verdicts.get(rule.conclusion)
            if any(v is None for v in values) or conclusion is None:
                continue
            if all(values) and not conclusion:
                violated.append(rule.label)
        if binary:
            for name in BINARY_FACTS:
                if verdicts.get(name) is False:
                    violated.append(f"{{0,1}}^n ⇒ {name}")
        return violated

    def get_performance_metrics(self) -> Dict[str, Any]:
        """Retourne les métriques de performance"""
        return self.performance_metrics.copy()

    def reset_metrics(self):
        """Remet à zéro les métriques de performance"""
        self.performance_metrics = {
            'total_classifications': 0,
            'consistent_classifications': 0,
            'inconsistencies': 0,
            'check_errors': 0,
            'average_classification_time': 0.0
        }


_default_classifier = SetClassifier()


def classify(point_set: PointSet) -> ClassReport:
    """Profil complet d'un ensemble avec le classificateur par défaut"""
    return _default_classifier.classify(point_set)
