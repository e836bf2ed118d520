#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Report assembly: input digests, the report envelope and atomic writes
"""

import hashlib
import json
import logging
import os
import sys
import tempfile

from models.report import RunReport

logger = logging.getLogger(__name__)

EXIT_OK = 0


def inputs_digest(paths, params):
    """
    sha256 over the input files and the inline parameters

    Args:
        paths (dict): Argument name -> file path
        params (dict): Inline parameters, JSON serializable

    Returns:
        str: 'sha256:<hex>'
    """
    digest = hashlib.sha256()
    for name in sorted(paths):
        digest.update(name.encode('utf-8'))
        with open(paths[name], 'rb') as handle:
            digest.update(handle.read())
    digest.update(json.dumps(params, sort_keys=True, default=str).encode('utf-8'))
    return f"sha256:{digest.hexdigest()}"


def build_report(command, run_config, digest, result, diagnostics, elapsed_ms):
    """Validate and assemble the report envelope"""
    return RunReport(
        command=command,
        config=run_config,
        inputs_digest=digest,
        result=result,
        diagnostics=diagnostics,
        elapsed_ms=0.0 if run_config.reproducible else elapsed_ms,
    )


def report_json(report):
    return json.dumps(report.model_dump(mode='json'), sort_keys=True, indent=2) + '\n'


def write_report(report, path=None):
    """
    Write the report to path, or stdout when path is None

    The file is written to a temporary sibling and moved into place.
    """
    text = report_json(report)
    if path is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix='.report-', suffix='.json')
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as handle:
            handle.write(text)
        os.replace(tmp_path, path)
    except OSError:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.info(f"Report written to {path}")
