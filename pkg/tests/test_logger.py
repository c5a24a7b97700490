import logging
from pathlib import Path

import pytest

from entropic_bell.logger import setup_logger


@pytest.fixture
def logger_name(request):
    name = f"entropic_bell.test.{request.node.name}"
    yield name
    logger = logging.getLogger(name)
    for handler in list(logger.handlers):
        handler.close()
        logger.removeHandler(handler)


def test_silent_by_default(logger_name):
    logger = setup_logger(logger_name)
    assert [type(h) for h in logger.handlers] == [logging.NullHandler]


def test_log_dir_writes_dated_file(logger_name, tmp_path: Path):
    log_dir = tmp_path / "logs"
    logger = setup_logger(logger_name, log_dir=log_dir)
    logger.info("scan finished")
    for handler in logger.handlers:
        handler.flush()

    files = list(log_dir.glob("entropic-bell-*.log"))
    assert len(files) == 1
    assert "INFO - scan finished" in files[0].read_text()


def test_verbose_adds_stream_handler(logger_name):
    logger = setup_logger(logger_name, verbose=True)
    assert logging.StreamHandler in {type(h) for h in logger.handlers}


def test_setup_is_idempotent(logger_name, tmp_path: Path):
    setup_logger(logger_name, log_dir=tmp_path, verbose=True)
    logger = setup_logger(logger_name, log_dir=tmp_path, verbose=True)
    assert len(logger.handlers) == 2
