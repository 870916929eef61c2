"""``python -m digitsum_crunchtools`` runs the digitsum command line."""

from .cli import run

if __name__ == "__main__":
    raise SystemExit(run())
