import pytest

from monstrous import codes


def test_rref_canonical():
    a = codes.BinaryCode.from_rows(4, [0b0011, 0b0110])
    b = codes.BinaryCode.from_rows(4, [0b0101, 0b0110])
    assert a == b
    assert a.dimension == 2


def test_contains_and_words():
    code = codes.BinaryCode.from_rows(3, [0b011, 0b110])
    words = set(code.words())
    assert words == {0b000, 0b011, 0b110, 0b101}
    assert code.contains(0b101)
    assert not code.contains(0b100)
    assert not code.contains(1 << 5)


def test_dual_of_repetition_code():
    rep = codes.BinaryCode.from_rows(3, [0b111])
    dual = codes.dual_code(rep)
    assert dual.dimension == 2
    # the dual is the even-weight code
    assert all(codes.weight(w) % 2 == 0 for w in dual.words())


def test_golay_certificate():
    code = codes.golay_code()
    assert code.length == 24
    assert code.dimension == 12
    assert codes.min_weight(code) == 8
    assert codes.is_doubly_even(code)
    assert codes.is_self_dual(code)


def test_golay_weight_enumerator():
    we = codes.weight_enumerator(codes.golay_code())
    assert we == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_golay_completion_recorded():
    assert codes.golay_qr_completion() in ("zero", "infinity")


def test_enumeration_guard():
    # a dimension-40 code must refuse enumeration
    big = codes.BinaryCode.from_rows(40, [1 << i for i in range(40)])
    with pytest.raises(codes.CodeError):
        list(big.words())


def test_text_round_trip():
    code = codes.golay_code()
    text = codes.code_to_text(code)
    assert codes.code_from_text(text) == code


def test_malformed_text_rejected():
    with pytest.raises(codes.CodeError):
        codes.code_from_text("4 1\n01")
