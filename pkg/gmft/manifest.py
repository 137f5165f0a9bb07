#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
 Created on 18-10-2026 12:31:09

 Run manifest: config snapshot, code version, and per-run output files with sha256 hashes
 and diagnostics. Saved as ``manifest.json`` in the output directory after every run.
"""
__author__ ="Benedict Wilkins"
__email__ = "benrjw@gmail.com"
__status__ ="Development"

import logging
logger = logging.getLogger("gmft.manifest")

import hashlib
import json
from datetime import datetime, timezone
from pathlib import Path

from .data.csvio import write_json
from .errors import ConfigError

FILENAME = "manifest.json"

def sha256(path, chunk=1 << 20):
    h = hashlib.sha256()
    with open(path, "rb") as f:
        for block in iter(lambda: f.read(chunk), b""):
            h.update(block)
    return h.hexdigest()

def _now():
    return datetime.now(timezone.utc).isoformat()

class RunManifest:

    def __init__(self, directory, config=None, version=None, command=None):
        from . import __version__
        self.directory = Path(directory)
        self.config = config or {}
        self.version = __version__ if version is None else version
        self.command = command
        self.created = _now()
        self.updated = self.created
        self.runs = {}

    @property
    def path(self):
        return self.directory / FILENAME

    def run(self, key):
        return self.runs.setdefault(str(key), {"status" : "pending", "files" : {}, "diagnostics" : {}})

    def add_file(self, key, path, kind):
        """ Records ``path`` (relative to the directory) with its content hash. """
        try:
            rel = Path(path).resolve().relative_to(self.directory.resolve())
        except ValueError:
            raise ConfigError("{0} is outside the run directory {1}".format(path, self.directory))
        self.run(key)["files"][str(rel)] = {"kind" : kind, "sha256" : sha256(self.directory / rel)}

    def mark(self, key, status, **diagnostics):
        entry = self.run(key)
        entry["status"] = status
        entry["diagnostics"].update(diagnostics)
        self.updated = _now()

    def completed(self, key):
        """ True if run ``key`` finished and all its files still match their hashes. """
        entry = self.runs.get(str(key))
        if entry is None or entry["status"] != "completed":
            return False
        for name, info in entry["files"].items():
            p = self.directory / name
            if not p.exists() or sha256(p) != info["sha256"]:
                logger.warning("run %s: file %s is missing or modified", key, name)
                return False
        return True

    def files(self, kind=None):
        """ (key, path) of every recorded file of the given kind, completed runs only. """
        out = []
        for key, entry in self.runs.items():
            if entry["status"] != "completed":
                continue
            for name, info in entry["files"].items():
                if kind is None or info["kind"] == kind:
                    out.append((key, self.directory / name))
        return out

    def verify(self):
        """ Problems found: files that are listed but missing or whose hash changed. """
        problems = []
        for key, entry in self.runs.items():
            for name, info in entry["files"].items():
                p = self.directory / name
                if not p.exists():
                    problems.append("{0}: {1} missing".format(key, name))
                elif sha256(p) != info["sha256"]:
                    problems.append("{0}: {1} hash mismatch".format(key, name))
        return problems

    def to_dict(self):
        return {"code_version" : self.version, "command" : self.command, "created" : self.created, "updated" : self.updated,
                "config" : self.config, "runs" : self.runs}

    def save(self):
        write_json(self.path, self.to_dict())
        return self.path

    @classmethod
    def load(cls, directory):
        directory = Path(directory)
        try:
            with open(directory / FILENAME) as f:
                d = json.load(f)
        except (OSError, ValueError) as e:
            raise ConfigError("cannot read manifest in {0}: {1}".format(directory, e))
        m = cls(directory, d.get("config"), d.get("code_version"), d.get("command"))
        m.created = d.get("created", m.created)
        m.updated = d.get("updated", m.updated)
        m.runs = d.get("runs", {})
        return m

    @classmethod
    def load_or_create(cls, directory, config=None, command=None):
        if (Path(directory) / FILENAME).exists():
            m = cls.load(directory)
            m.command = command or m.command
            return m
        return cls(directory, config, command=command)
