import pytest

from sqfsparse.config import DEFAULTS, ConfigError, effective_config, load_config


def test_empty_file_gives_defaults(tmp_path):
    p = tmp_path / "empty.cfg"
    p.write_text("")
    assert load_config(p) == {}
    assert effective_config(str(p), {}) == DEFAULTS


def test_layering(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("# ceilings\nmax-evals = 100\nworkers = 2  # trailing comment\n")
    cfg = effective_config(str(p), {"workers": 3, "box_ceiling": None})
    assert cfg["max_evals"] == 100
    assert cfg["workers"] == 3
    assert cfg["box_ceiling"] == DEFAULTS["box_ceiling"]


def test_unknown_key_is_named(tmp_path):
    p = tmp_path / "c.cfg"
    p.write_text("colour = 3\n")
    with pytest.raises(ConfigError, match="colour"):
        load_config(p)


@pytest.mark.parametrize("line", ["workers", "workers = two", "workers = 0", "workers = -1"])
def test_malformed_values(tmp_path, line):
    p = tmp_path / "c.cfg"
    p.write_text(line + "\n")
    with pytest.raises(ConfigError):
        load_config(p)
