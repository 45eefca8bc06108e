"""The package must work when the compiled kernels are absent."""
import subprocess
import sys


def test_fallback_when_extension_missing():
    code = (
        "import sys; sys.modules['bsdh_fano._ckernels'] = None\n"
        "from bsdh_fano import kernels\n"
        "from bsdh_fano.fano import audit\n"
        "from bsdh_fano.rootsys import SimpleType\n"
        "assert kernels.BACKEND == 'python', kernels.BACKEND\n"
        "assert kernels.available_backends() == ['python']\n"
        "print(audit(SimpleType.parse('G2'), 6).words_checked)\n"
    )
    proc = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.strip() == "13"
