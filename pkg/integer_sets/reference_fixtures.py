"""
📚 Exemples de Référence
========================

Charge les exemples travaillés embarqués dans data/fixtures/*.json et
rejoue leurs vérifications: propriétés attendues (éventuellement sur une
projection), certificats attendus, et solutions entières d'un système.

Format d'un fichier:
    {"name": ..., "set": {"dim": n, "points": [...]},
     "system": {...}, "box": "l1:u1,...",
     "checks": [{"check": "property", "property": "mu-closed", "holds": false,
                 "project": [1, 2], "expect": {"produced": [1, 0]}},
                {"check": "solutions"}]}
"""

import glob
import json
import logging
import os
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from config import FIXTURES_DIR

from .classifier import SetClassifier
from .core_types import PointSet
from .errors import InputFormatError, IntegerSetError, UnknownNameError
from .joins import project
from .lattice import Box
from .representation import integer_solutions
from .set_io import point_set_from_dict, system_from_dict

logger = logging.getLogger(__name__)


@dataclass
class FixtureResult:
    """Résultat du rejeu d'un exemple"""
    name: str
    passed: bool = True
    checks: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    def fail(self, message: str):
        self.passed = False
        self.failures.append(message)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'name': self.name,
            'status': 'PASS' if self.passed else 'FAIL',
            'checks': self.checks,
            'failures': list(self.failures),
            'elapsed': round(self.elapsed, 4),
        }


def load_fixtures(directory: str = FIXTURES_DIR) -> List[Dict[str, Any]]:
    """Exemples triés par nom"""
    fixtures = []
    for path in sorted(glob.glob(os.path.join(directory, '*.json'))):
        with open(path, 'r', encoding='utf-8') as handle:
            try:
                data = json.load(handle)
            except json.JSONDecodeError as e:
                raise InputFormatError(f"Exemple illisible {path}: {e}") from e
        if 'name' not in data or 'set' not in data:
            raise InputFormatError(f"Exemple {path}: champs 'name' et 'set' requis")
        fixtures.append(data)
    fixtures.sort(key=lambda f: f['name'])
    logger.debug(f"{len(fixtures)} exemple(s) chargé(s) depuis {directory}")
    return fixtures


class FixtureRunner:
    """Rejoue les vérifications des exemples embarqués"""

    def __init__(self, classifier: Optional[SetClassifier] = None):
        self.classifier = classifier or SetClassifier()

    def run_all(self, directory: str = FIXTURES_DIR, names: Optional[Sequence[str]] = None) -> List[FixtureResult]:
        fixtures = load_fixtures(directory)
        if names:
            known = {f['name'] for f in fixtures}
            unknown = [n for n in names if n not in known]
            if unknown:
                raise UnknownNameError(f"Exemple(s) inconnu(s): {unknown}")
            fixtures = [f for f in fixtures if f['name'] in names]
        return [self.run_fixture(f) for f in fixtures]

    def run_fixture(self, fixture: Dict[str, Any]) -> FixtureResult:
        result = FixtureResult(fixture['name'])
        start = time.time()
        try:
            point_set = point_set_from_dict(fixture['set'])
            for check in fixture.get('checks', []):
                result.checks += 1
                kind = check.get('check')
                if kind == 'property':
                    self._check_property(point_set, check, result)
                elif kind == 'solutions':
                    self._check_solutions(point_set, fixture, result)
                else:
                    result.fail(f"type de vérification inconnu: {kind!r}")
        except IntegerSetError as e:
            result.fail(f"erreur: {e}")
        result.elapsed = time.time() - start

        if result.passed:
            logger.info(f"✅ {result.name}: {result.checks} vérification(s)")
        else:
            logger.error(f"❌ {result.name}: {'; '.join(result.failures)}")
        return result

    def _check_property(self, point_set: PointSet, check: Dict[str, Any], result: FixtureResult):
        name = check['property']
        if name not in self.classifier.checkers:
            raise UnknownNameError(f"Propriété inconnue: {name}")
        target = point_set
        where = ''
        if check.get('project'):
            target = project(point_set, check['project'])
            where = f" sur la projection {check['project']}"

        holds, certificate = self.classifier.checkers[name](target)
        if holds != check['holds']:
            result.fail(f"{name}{where}: obtenu {holds}, attendu {check['holds']}")
            return
        for key, expected in check.get('expect', {}).items():
            actual = (certificate or {}).get(key)
            if actual != expected:
                result.fail(f"{name}{where}: certificat '{key}' = {actual}, attendu {expected}")

    @staticmethod
    def _check_solutions(point_set: PointSet, fixture: Dict[str, Any], result: FixtureResult):
        if 'system' not in fixture or 'box' not in fixture:
            result.fail("vérification 'solutions' sans système ni boîte")
            return
        system = system_from_dict(fixture['system'])
        solutions = integer_solutions(system, Box.parse(fixture['box']))
        if solutions != point_set:
            missing = sorted(point_set.points - solutions.points)
            extra = sorted(solutions.points - point_set.points)
            result.fail(f"solutions entières: manquants {missing}, en trop {extra}")

    @staticmethod
    def to_frame(results: Sequence[FixtureResult]) -> pd.DataFrame:
        return pd.DataFrame([
            {
                'exemple': r.name,
                'statut': 'PASS' if r.passed else 'FAIL',
                'verifications': r.checks,
                'echecs': '; '.join(r.failures),
            }
            for r in results
        ], columns=['exemple', 'statut', 'verifications', 'echecs'])


def run_reference_examples(directory: str = FIXTURES_DIR) -> List[FixtureResult]:
    """Rejoue tous les exemples embarqués, dans l'ordre des noms"""
    return FixtureRunner().run_all(directory)
