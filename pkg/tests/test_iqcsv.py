import numpy as np
import pytest

from rxkit.errors import FormatError
from rxkit.iqcsv import read_iq_csv, write_iq_csv


def test_round_trip_preserves_values():
    rng = np.random.default_rng(0)
    frame = rng.standard_normal(50) + 1j * rng.standard_normal(50)
    assert np.array_equal(read_iq_csv(write_iq_csv(frame)), frame)


def test_reads_fixture(data_dir):
    frame = read_iq_csv((data_dir / "qpsk_meas_iq.csv").read_text())
    assert frame[0] == 0.9 + 1.1j
    assert frame.size == 4


def test_header_required():
    with pytest.raises(FormatError, match="line 1"):
        read_iq_csv("x,y\n1,2\n")


def test_empty_file_rejected():
    with pytest.raises(FormatError):
        read_iq_csv("")


def test_bad_cell_reports_line():
    with pytest.raises(FormatError, match="line 3"):
        read_iq_csv("i,q\n1,2\n3,abc\n")


def test_wrong_field_count_rejected():
    with pytest.raises(FormatError, match="line 2"):
        read_iq_csv("i,q\n1\n")
