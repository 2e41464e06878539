import importlib.util
from pathlib import Path

import pytest

RUN_PY = Path(__file__).resolve().parent.parent / 'run.py'


@pytest.fixture
def launcher():
    spec = importlib.util.spec_from_file_location('rgcbench_launcher', RUN_PY)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    yield module
    for handler in list(module.log.handlers):
        module.log.removeHandler(handler)
        handler.close()


def test_finalize_logging_creates_log_dir(launcher, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    launcher.log.debug("before the log file exists")
    launcher.finalize_logging()
    launcher.log.debug("after the log file exists")
    for handler in launcher.log.handlers:
        handler.flush()
    text = (tmp_path / 'logs' / 'rgcbench.log').read_text(encoding='utf8')
    assert 'before the log file exists' in text
    assert 'PRE-RUN SANITY CHECKS PASSED' in text
    assert 'after the log file exists' in text


def test_previous_log_is_kept(launcher, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / 'logs').mkdir()
    (tmp_path / 'logs' / 'rgcbench.log').write_text('old run\n', encoding='utf8')
    launcher.finalize_logging()
    assert (tmp_path / 'logs' / 'rgcbench.log.last').read_text(encoding='utf8') == 'old run\n'
