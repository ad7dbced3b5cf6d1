"""Thread-safe, write-once cache for non-symmetric polynomials."""

import json
import os
import threading

from hodunkl.common.exceptions import CacheIntegrityError
from hodunkl.common.json_serializable import canonical_digest
from hodunkl.common.parallelizer import printout


def epoly_cache_key(root_system, multiplicity, weight):
    """
    Return the canonical JSON key of E_lambda for (R, k, lambda).

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Multiplicity.

    weight : tuple of int
        Weight lambda.

    Returns
    -------
    key : dict
        JSON-able key.
    """
    return {
        "root_system": root_system.code,
        "multiplicity": multiplicity.to_json(),
        "weight": [int(c) for c in weight],
    }


class EPolyCache:
    """
    Write-once map from (R, k, lambda) to E_lambda.

    Entries live in memory and, if a directory is given, also on disk under
    the sha256 digest of their canonical key. Every file carries the key and
    a checksum of its payload; both are verified on reading.

    Parameters
    ----------
    directory : str
        Directory of the on-disk store. If None, the cache is in memory
        only.
    """

    def __init__(self, directory=None):
        self.directory = directory
        self._entries = {}
        self._lock = threading.Lock()
        if directory is not None:
            os.makedirs(directory, exist_ok=True)

    def __len__(self):
        return len(self._entries)

    def path_for(self, key):
        """Return the file an entry with this key is stored in."""
        return os.path.join(self.directory, canonical_digest(key) + ".json")

    def get(self, key):
        """
        Return the cached EPoly JSON for a key, or None.

        Parameters
        ----------
        key : dict
            Key as returned by epoly_cache_key.

        Returns
        -------
        payload : dict or None
            The JSON form of the cached EPoly.
        """
        digest = canonical_digest(key)
        with self._lock:
            if digest in self._entries:
                return self._entries[digest]
        if self.directory is None:
            return None
        path = self.path_for(key)
        if not os.path.isfile(path):
            return None
        payload = self._read_file(path, key)
        with self._lock:
            return self._entries.setdefault(digest, payload)

    def put(self, key, payload):
        """
        Store an entry, unless one is already present.

        Parameters
        ----------
        key : dict
            Key as returned by epoly_cache_key.

        payload : dict
            JSON form of the EPoly.

        Returns
        -------
        stored : dict
            The payload held by the cache after the call. For a key that was
            already present this is the earlier entry.
        """
        digest = canonical_digest(key)
        with self._lock:
            if digest in self._entries:
                return self._entries[digest]
            self._entries[digest] = payload
            if self.directory is not None:
                path = self.path_for(key)
                if not os.path.isfile(path):
                    self._write_file(path, key, payload)
            return payload

    @staticmethod
    def _write_file(path, key, payload):
        temporary = path + ".tmp." + str(threading.get_ident())
        with open(temporary, "w", encoding="utf-8") as f:
            json.dump(
                {
                    "key": key,
                    "checksum": canonical_digest(payload),
                    "payload": payload,
                },
                f,
                sort_keys=True,
                indent=1,
            )
        os.replace(temporary, path)
        printout("Cached E polynomial in", path, min_verbosity=2)

    @staticmethod
    def _read_file(path, key):
        try:
            with open(path, encoding="utf-8") as f:
                document = json.load(f)
            stored_key = document["key"]
            checksum = document["checksum"]
            payload = document["payload"]
        except (OSError, ValueError, KeyError, TypeError) as error:
            raise CacheIntegrityError(
                "Unreadable cache file " + path + ": " + str(error),
                {"path": path},
            )
        if canonical_digest(stored_key) != canonical_digest(key):
            raise CacheIntegrityError(
                "Cache file " + path + " holds a different key.",
                {"path": path, "expected": key, "found": stored_key},
            )
        if canonical_digest(payload) != checksum:
            raise CacheIntegrityError(
                "Checksum mismatch in cache file " + path + ".",
                {"path": path},
            )
        return payload
