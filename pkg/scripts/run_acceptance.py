"""Run the acceptance criteria and print one PASS/FAIL line each."""
import os
import subprocess
import sys


def main() -> int:
    root = os.path.join(os.path.dirname(os.path.abspath(__file__)), os.pardir)
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", "-s", "-p", "no:cacheprovider",
                           os.path.join(root, "tests", "test_acceptance.py")],
                          capture_output=True, text=True, cwd=root)
    lines = [l for l in proc.stdout.splitlines() if l.startswith("criterion ")]
    print("\n".join(lines))
    if len(lines) < 10:
        print(proc.stdout[-2000:], proc.stderr[-2000:], sep="\n")
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
