"""Makes the CMake-built package importable when izroupoid is not installed."""

import pathlib
import sys


def _add_build_tree_package():
    try:
        import izroupoid  # noqa: F401
        return
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parents[2]
    for build_dir in sorted(root.glob("build*")):
        pkg = build_dir / "python_pkg"
        if (pkg / "izroupoid" / "__init__.py").exists():
            sys.path.insert(0, str(pkg))
            return


_add_build_tree_package()
