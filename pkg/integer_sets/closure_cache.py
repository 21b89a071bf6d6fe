"""
💾 Cache des Fermetures
=======================

Cache basé sur une empreinte de l'ensemble pour éviter de recalculer les
fermetures d'ensembles déjà vus (classification, suites de vérification).
"""

import hashlib
import logging
from collections import OrderedDict
from typing import Any, Dict, Optional

from .core_types import PointSet

logger = logging.getLogger(__name__)


class ClosureCache:
    """
    Cache LRU des fermetures calculées

    La clé combine le type de fermeture et une empreinte md5 de la liste
    canonique (triée) des points.
    """

    def __init__(self, max_size: int = 512):
        """
        Initialise le cache

        Args:
            max_size: Nombre maximal d'entrées conservées
        """
        self.cache: 'OrderedDict[str, PointSet]' = OrderedDict()
        self.max_size = max_size
        self.stats = {
            'hits': 0,
            'misses': 0,
            'evictions': 0,
            'total_requests': 0
        }

    def get_cache_key(self, kind: str, point_set: PointSet) -> str:
        """
        Génère une clé de cache depuis le type de fermeture et l'ensemble

        Args:
            kind: Type de fermeture ("utvpi", "op:mu", ...)
            point_set: Ensemble d'entrée

        Returns:
            Clé de cache (hash)
        """
        canonical = f"{kind}|{point_set.dim}|" + ';'.join(
            ','.join(str(c) for c in p) for p in point_set.ordered
        )
        return hashlib.md5(canonical.encode('utf-8')).hexdigest()

    def get(self, cache_key: str) -> Optional[PointSet]:
        """Récupère une fermeture depuis le cache, None si absente"""
        self.stats['total_requests'] += 1

        if cache_key not in self.cache:
            self.stats['misses'] += 1
            return None

        self.cache.move_to_end(cache_key)
        self.stats['hits'] += 1
        logger.debug(f"Cache hit pour la clé: {cache_key[:8]}...")
        return self.cache[cache_key]

    def set(self, cache_key: str, closed_set: PointSet):
        """Sauvegarde une fermeture, en évinçant l'entrée la moins récemment utilisée"""
        if self.max_size <= 0:
            return
        if cache_key in self.cache:
            self.cache.move_to_end(cache_key)
        elif len(self.cache) >= self.max_size:
            oldest_key, _ = self.cache.popitem(last=False)
            self.stats['evictions'] += 1
            logger.debug(f"Cache éviction pour la clé: {oldest_key[:8]}...")
        self.cache[cache_key] = closed_set

    def clear(self):
        """Vide complètement le cache"""
        self.cache.clear()
        self.stats = {
            'hits': 0,
            'misses': 0,
            'evictions': 0,
            'total_requests': 0
        }
        logger.info("Cache des fermetures vidé")

    def get_stats(self) -> Dict[str, Any]:
        """
        Retourne les statistiques du cache

        Returns:
            Dictionnaire des statistiques
        """
        hit_rate = (
            self.stats['hits'] / self.stats['total_requests'] * 100
            if self.stats['total_requests'] > 0 else 0
        )

        return {
            'size': len(self.cache),
            'max_size': self.max_size,
            'hits': self.stats['hits'],
            'misses': self.stats['misses'],
            'evictions': self.stats['evictions'],
            'total_requests': self.stats['total_requests'],
            'hit_rate': round(hit_rate, 2)
        }
