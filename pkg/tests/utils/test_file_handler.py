import json
import os
import pickle
import tempfile

from ncposet.utils.file_handler import emit, load_file, save_file


def test_load_file_json():
    data = {"n": 5, "blocks": [[1, 2, 3], [4], [5]]}
    _, file_path = tempfile.mkstemp(suffix=".json")
    save_file(file_path, data, writer=json.dump)
    assert load_file(file_path, loader=json.load) == data
    os.remove(file_path)


def test_missing_file_path():
    assert load_file(None, loader=json.load) is None


def test_load_file_default_loader():
    _, file_path = tempfile.mkstemp(suffix=".txt")
    with open(file_path, "w") as f:
        f.write("1|2,3")
    assert load_file(file_path) == "1|2,3"
    os.remove(file_path)


def test_save_binary_file():
    data = b"1|2,3"
    _, file_path = tempfile.mkstemp(suffix=".pkl")
    save_file(file_path, data, mode="wb", writer=pickle.dump)
    assert load_file(file_path, mode="rb", loader=pickle.load) == data
    os.remove(file_path)


def test_save_file_no_path():
    assert save_file(None) is None


def test_emit_to_stdout(capsys):
    emit("formula=7")
    assert capsys.readouterr().out == "formula=7\n"


def test_emit_to_file():
    _, file_path = tempfile.mkstemp(suffix=".svg")
    emit("<svg></svg>\n", out=file_path)
    assert load_file(file_path) == "<svg></svg>\n"
    os.remove(file_path)
