"""
Build information for the graph_covers command line tool.
Provides the version string and, when run from a git checkout, commit details.
"""

import os
import subprocess
from typing import Optional, Tuple


def _run_git(args: list, cwd: str) -> Optional[str]:
    result = subprocess.run(
        ['git', *args],
        cwd=cwd,
        capture_output=True,
        text=True,
        timeout=5
    )
    return result.stdout.strip() if result.returncode == 0 else None


def get_git_info() -> Tuple[Optional[str], Optional[str], Optional[str]]:
    """
    Get Git commit hash, date, and branch name.

    Returns:
        Tuple of (commit_hash, commit_date, branch_name) or (None, None, None) if not available
    """
    try:
        project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
        commit_hash = _run_git(['rev-parse', '--short', 'HEAD'], project_root)
        commit_date = _run_git(['log', '-1', '--format=%cd', '--date=short'], project_root)
        branch_name = _run_git(['rev-parse', '--abbrev-ref', 'HEAD'], project_root)
        return commit_hash, commit_date, branch_name
    except (subprocess.TimeoutExpired, subprocess.CalledProcessError, FileNotFoundError, OSError):
        return None, None, None


def get_version() -> str:
    """Return the package version."""
    from . import __version__
    return __version__


def get_build_info() -> dict:
    """
    Get comprehensive build information.

    Returns:
        Dictionary containing build information
    """
    commit_hash, commit_date, branch_name = get_git_info()
    return {
        'version': get_version(),
        'commit_hash': commit_hash,
        'commit_date': commit_date,
        'branch_name': branch_name,
        'is_git_repo': commit_hash is not None
    }


def format_build_string() -> str:
    """
    Format build information for ``--version``.

    Returns:
        e.g. ``graph_covers 1.0.0 (abc1234, 2025-01-02) [feature-branch]``
    """
    info = get_build_info()
    build_string = f"graph_covers {info['version']}"

    if info['commit_hash']:
        detail = info['commit_hash']
        if info['commit_date']:
            detail += f", {info['commit_date']}"
        build_string += f" ({detail})"

    # Branch is only interesting off the mainline
    if info['branch_name'] and info['branch_name'] not in ['main', 'master', 'HEAD']:
        build_string += f" [{info['branch_name']}]"

    return build_string
