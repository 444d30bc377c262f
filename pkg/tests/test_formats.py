import pytest

from fwknap import (
    Clause,
    CnfFormula,
    KnapsackInstance,
    Literal,
    parse_dimacs,
    read_instance,
    reduce_formula,
    write_dimacs,
    write_instance,
)
from fwknap.formats import FormatError

from conftest import random_instance


class TestDimacs:
    def test_paper_example(self, paper_formula):
        f = parse_dimacs("p cnf 3 2\n1 2 3 0\n1 -2 -3 0\n")
        assert f == paper_formula

    def test_empty_formula(self):
        f = parse_dimacs("p cnf 1 0\n")
        assert f.k == 1 and f.m == 0

    def test_dedup_in_clause(self):
        f = parse_dimacs("p cnf 2 1\n1 -1 2 2 0\n")
        assert f.clauses[0].literals == (Literal(1), Literal(1, False), Literal(2))

    def test_comments_and_multiline_clauses(self):
        f = parse_dimacs("c a comment\np cnf 2 1\n1\n2 0\n")
        assert f.m == 1 and len(f.clauses[0]) == 2

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("p dnf 1 1\n1 0\n", "malformed header"),
            ("1 0\n", "before 'p cnf' header"),
            ("p cnf 1 1\n0\n", "empty clause"),
            ("p cnf 4 1\n1 2 3 4 0\n", "distinct literals"),
            ("p cnf 2 1\n3 0\n", "exceeds k=2"),
            ("p cnf 1 2\n1 0\n", "declares 2 clauses"),
            ("p cnf 1 1\n1\n", "unterminated"),
            ("p cnf 1 1\nx 0\n", "bad token"),
        ],
    )
    def test_diagnostics(self, text, fragment):
        with pytest.raises(FormatError, match=fragment):
            parse_dimacs(text)

    def test_error_carries_line_number(self):
        with pytest.raises(FormatError, match="line 3"):
            parse_dimacs("c x\np cnf 1 1\n0\n")

    def test_roundtrip(self, paper_formula):
        assert parse_dimacs(write_dimacs(paper_formula)) == paper_formula


class TestInstanceFile:
    def test_roundtrip_reduction(self, paper_formula):
        inst, layout = reduce_formula(paper_formula)
        meta = {"k": layout.k, "m": layout.m, "beta": layout.beta}
        text = write_instance(inst, meta)
        back, back_meta = read_instance(text)
        assert back == inst
        assert back_meta == meta

    def test_roundtrip_empty(self):
        inst = KnapsackInstance((), 0, (), 0)
        back, meta = read_instance(write_instance(inst))
        assert back == inst
        assert meta == {"k": None, "m": None, "beta": None}

    def test_roundtrip_random(self, rng):
        for _ in range(20):
            inst = random_instance(rng, max_coeff=10**30)
            assert read_instance(write_instance(inst))[0] == inst

    def test_tampered_digit_detected(self, paper_formula):
        inst, _ = reduce_formula(paper_formula)
        text = write_instance(inst)
        bound_line = next(l for l in text.splitlines() if l.startswith("bound"))
        digits = bound_line.split()[1]
        flipped = digits[:-1] + ("1" if digits[-1] != "1" else "2")
        tampered = text.replace(bound_line, "bound " + flipped)
        with pytest.raises(FormatError, match="checksum"):
            read_instance(tampered)

    def test_version_and_magic_diagnostics(self):
        text = write_instance(KnapsackInstance((1, 2), 2, (3, 4), 3))
        with pytest.raises(FormatError, match="version"):
            read_instance(text.replace("fwknap-instance 1", "fwknap-instance 9"))
        with pytest.raises(FormatError, match="not an instance"):
            read_instance("banana\n" + text[text.index("\n") + 1:])

    def test_missing_field_diagnostic(self):
        import hashlib
        lines = ["fwknap-instance 1", "n 1", "capacity 1", "weights 1", "values 1"]
        digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
        text = "\n".join(lines + [f"checksum {digest}"]) + "\n"
        with pytest.raises(FormatError, match="missing field 'bound'"):
            read_instance(text)

    def test_leading_zero_rejected(self):
        # rebuild with a bad decimal but a valid checksum: still refused
        import hashlib
        lines = ["fwknap-instance 1", "n 1", "capacity 01", "bound 0",
                 "weights 1", "values 1"]
        digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
        text = "\n".join(lines + [f"checksum {digest}"]) + "\n"
        with pytest.raises(FormatError, match="malformed decimal"):
            read_instance(text)

    def test_length_mismatch(self):
        import hashlib
        lines = ["fwknap-instance 1", "n 2", "capacity 1", "bound 0",
                 "weights 1", "values 1 2"]
        digest = hashlib.sha256("\n".join(lines).encode()).hexdigest()
        text = "\n".join(lines + [f"checksum {digest}"]) + "\n"
        with pytest.raises(FormatError, match="weights length"):
            read_instance(text)
