#!/usr/bin/env python3
"""Download the public SMS Spam Collection into data/SMSSpamCollection.

The corpus is 5,574 labeled text messages distributed by the UCI Machine
Learning Repository. This script needs network access; in offline
environments, download the zip elsewhere and copy the extracted
``SMSSpamCollection`` file into data/ by hand.
"""

import argparse
import io
import sys
import urllib.request
import zipfile
from pathlib import Path

URL = "https://archive.ics.uci.edu/static/public/228/sms+spam+collection.zip"
MEMBER = "SMSSpamCollection"
EXPECTED_MESSAGES = 5574


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--dest",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "data" / MEMBER,
        help="where to place the corpus file (default: data/SMSSpamCollection)",
    )
    args = parser.parse_args()

    if args.dest.exists():
        print(f"{args.dest} already exists; nothing to do")
        return 0

    print(f"fetching {URL} ...")
    try:
        with urllib.request.urlopen(URL, timeout=60) as response:
            payload = response.read()
    except OSError as exc:
        print(f"download failed: {exc}", file=sys.stderr)
        print(
            "no network access? download the zip manually and extract "
            f"{MEMBER} to {args.dest}",
            file=sys.stderr,
        )
        return 1

    with zipfile.ZipFile(io.BytesIO(payload)) as zf:
        raw = zf.read(MEMBER)

    n_lines = sum(1 for line in raw.decode("utf-8").splitlines() if line.strip())
    if n_lines != EXPECTED_MESSAGES:
        print(
            f"warning: expected {EXPECTED_MESSAGES} messages, got {n_lines}",
            file=sys.stderr,
        )

    args.dest.parent.mkdir(parents=True, exist_ok=True)
    args.dest.write_bytes(raw)
    print(f"wrote {args.dest} ({n_lines} messages)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
