"""
Tests for experiment configuration, episode running, statistics and tables.
"""

import pytest
import yaml

from rhneat.bench import (
    ALL_EPISODES,
    ALL_GAMES,
    AgentSpec,
    EpisodeResult,
    ExperimentConfig,
    RawResultWriter,
    SummaryRow,
    ablation_agents,
    ablation_grid,
    binomial_se,
    emit_tables,
    episode_seed,
    read_raw,
    read_summary_csv,
    resolve_output_dir,
    run_episode,
    sample_se,
    summarize,
    to_csv,
    to_markdown,
)
from rhneat.exceptions import ConfigurationError
from rhneat.games import SUITE
from rhneat.types import AgentKind, FitnessMode, RewardMode


def result(agent="a", game="collect", win=True, score=1.0, level=0, repetition=0):
    return EpisodeResult(
        game=game,
        level=level,
        repetition=repetition,
        agent=agent,
        seed=7,
        win=win,
        score=score,
        ticks=12,
        fm_calls=3000,
    )


@pytest.mark.unit
class TestExperimentConfig:
    def base(self, **overrides):
        data = {"agents": [{"id": "r", "kind": "random"}], "games": ["corridor"], "levels": [0]}
        data.update(overrides)
        return data

    def test_defaults(self):
        cfg = ExperimentConfig.from_mapping({"agents": [{"id": "r", "kind": "random"}]})
        assert cfg.games == list(SUITE)
        assert cfg.levels == [0, 1, 2, 3, 4]
        assert cfg.repetitions == 20
        assert cfg.budget == 1000
        assert cfg.episode_count == 5 * 5 * 20

    @pytest.mark.parametrize(
        "overrides",
        [
            {"repetitions": 0},
            {"agents": []},
            {"games": ["pong"]},
            {"levels": [5]},
            {"agents": [{"id": "a,b", "kind": "random"}]},
            {"agents": [{"id": "r", "kind": "random"}, {"id": "r", "kind": "mcts"}]},
            {"agents": [{"id": "r", "kind": "random", "speed": 3}]},
            {"budget": -1},
        ],
    )
    def test_rejects_invalid(self, overrides):
        with pytest.raises(ConfigurationError) as exc:
            ExperimentConfig.from_mapping(self.base(**overrides))
        assert exc.value.details["errors"]

    def test_non_mapping(self):
        with pytest.raises(ConfigurationError):
            ExperimentConfig.from_mapping(["agents"])

    def test_episode_order(self):
        cfg = ExperimentConfig.from_mapping(self.base(levels=[0, 1], repetitions=2))
        keys = list(cfg.episodes())
        assert len(keys) == cfg.episode_count == 4
        assert keys == sorted(keys)
        assert (keys[0].level, keys[0].repetition) == (0, 0)
        assert (keys[-1].level, keys[-1].repetition) == (1, 1)

    def test_unknown_agent_lookup(self):
        with pytest.raises(ConfigurationError):
            ExperimentConfig.from_mapping(self.base()).agent("ghost")

    def test_yaml_round_trip(self, tmp_path):
        cfg = ablation_grid("reward", games=["race"], levels=[2], repetitions=3)
        path = tmp_path / "exp.yaml"
        path.write_text(cfg.to_yaml())
        assert ExperimentConfig.from_yaml(path) == cfg

    def test_agent_settings_reach_the_planner(self):
        spec = AgentSpec.model_validate(
            {"id": "x", "kind": "rhneat", "rhneat": {"population_size": 6, "reward_mode": "acc"}}
        )
        agent = spec.build(seed=1)
        assert agent.config.neat.population_size == 6
        assert agent.config.reward_mode is RewardMode.ACC
        assert agent.name == "x"


@pytest.mark.unit
class TestEpisodeSeed:
    def test_deterministic(self):
        assert episode_seed(0, "race", 3, 7) == episode_seed(0, "race", 3, 7)

    def test_coordinates_change_the_seed(self):
        seeds = {
            episode_seed(0, "race", 3, 7),
            episode_seed(1, "race", 3, 7),
            episode_seed(0, "shoot", 3, 7),
            episode_seed(0, "race", 4, 7),
            episode_seed(0, "race", 3, 8),
        }
        assert len(seeds) == 5

    def test_non_negative_int64(self):
        for rep in range(50):
            assert 0 <= episode_seed(9, "collect", 0, rep) < 2**63


@pytest.mark.unit
class TestAblationGrid:
    def test_groups(self):
        abl = [a.id for a in ablation_grid("abl").agents]
        assert abl == ["rhneat", "rhneat+sp", "rhneat+cp", "rhneat+sp+cp"]
        assert [a.id for a in ablation_grid("baselines").agents] == ["rhneat+sp+cp", "rhea", "mcts"]
        assert len(ablation_grid("all").agents) == len(ablation_agents()) == 10

    def test_component_switches(self):
        by_id = {a.id: a.rhneat for a in ablation_agents()}
        assert not by_id["rhneat"].speciation and not by_id["rhneat"].population_carrying
        assert by_id["rhneat+sp"].speciation and not by_id["rhneat+sp"].population_carrying
        assert by_id["rhneat+cp"].population_carrying and not by_id["rhneat+cp"].speciation

    def test_variant_parameters(self):
        by_id = {a.id: a for a in ablation_agents()}
        assert by_id["rhneat-accdisc"].rhneat.reward_mode is RewardMode.ACCDISC
        assert by_id["rhneat-accdisc"].rhneat.gamma == 0.9
        assert by_id["rhneat-lr"].rhneat.fitness_mode is FitnessMode.LR
        assert by_id["rhneat-lr"].rhneat.alpha == 0.2
        assert by_id["rhea"].kind is AgentKind.RHEA

    def test_unknown_group(self):
        with pytest.raises(ConfigurationError):
            ablation_grid("speed")


@pytest.mark.unit
class TestStats:
    def test_binomial_se(self):
        assert binomial_se(0.36, 100) == pytest.approx(0.048)
        assert binomial_se(0.5, 0) == 0.0

    def test_sample_se(self):
        assert sample_se([1.0]) == 0.0
        assert sample_se([1.0, 3.0]) == pytest.approx(1.0)

    def test_win_rate_of_thirty_six_in_a_hundred(self):
        results = [result(win=i < 36, repetition=i) for i in range(100)]
        row = summarize(results)[0]
        assert row.n == 100
        assert row.win_rate == 0.36
        assert row.win_se == pytest.approx(0.048)

    def test_aggregate_rows(self):
        results = [
            result(game="collect", win=True, score=2.0),
            result(game="collect", win=False, score=0.0, repetition=1),
            result(game="race", win=True, score=1.0),
        ]
        rows = summarize(results)
        assert [r.game for r in rows] == ["collect", "race", ALL_EPISODES, ALL_GAMES]
        pooled, across = rows[2], rows[3]
        assert pooled.n == 3 and pooled.win_rate == pytest.approx(2 / 3)
        assert across.n == 2
        assert across.win_rate == 0.75
        assert across.mean_score == 1.0

    def test_agent_order(self):
        rows = summarize([result(agent="b"), result(agent="a")], agent_order=["a", "b"])
        assert rows[0].agent == "a"

    def test_empty(self):
        assert summarize([]) == []


@pytest.mark.unit
class TestTables:
    ROWS = [SummaryRow("rhneat", "race", 100, 0.36, 0.048, 1.25, 0.1)]

    def test_csv_layout(self):
        lines = to_csv(self.ROWS).splitlines()
        assert lines[0] == "agent,game,n,win_rate,win_se,mean_score,score_se"
        assert lines[1] == "rhneat,race,100,0.36,0.048,1.25,0.1"
        assert len(lines) == 2

    def test_csv_parse_and_reemit_is_identical(self, tmp_path):
        rows = summarize([result(win=i % 3 == 0, score=i / 7, repetition=i) for i in range(11)])
        emitted = to_csv(rows)
        path = tmp_path / "summary.csv"
        path.write_text(emitted)
        assert to_csv(read_summary_csv(path)) == emitted

    def test_markdown_uses_four_decimals(self):
        lines = to_markdown(self.ROWS).splitlines()
        assert lines[0].startswith("| agent | game | n |")
        assert lines[2] == "| rhneat | race | 100 | 0.3600 | 0.0480 | 1.2500 | 0.1000 |"

    def test_emit(self, tmp_path):
        written = emit_tables(self.ROWS, tmp_path)
        assert written["csv"].read_text() == to_csv(self.ROWS)
        assert written["markdown"].name == "summary.md"

    def test_emit_rejects_unknown_format_and_no_rows(self, tmp_path):
        with pytest.raises(ConfigurationError):
            emit_tables(self.ROWS, tmp_path, formats=["latex"])
        with pytest.raises(ConfigurationError):
            emit_tables([], tmp_path)


@pytest.mark.unit
class TestRawResults:
    def test_append_and_read(self, tmp_path):
        path = tmp_path / "raw" / "episodes.csv"
        writer = RawResultWriter(path)
        first = result(score=0.1)
        second = EpisodeResult("race", 1, 2, "b", 5, False, -3.5, 500, 0, 0.25, "ValueError: boom")
        writer.append(first)
        writer.append(second)
        assert path.read_text().count("\n") == 3
        assert read_raw(path) == [first, second]

    def test_missing_file(self, tmp_path):
        assert read_raw(tmp_path / "none.csv") == []

    def test_output_dir_resolution(self, tmp_path, monkeypatch):
        cfg = ExperimentConfig.from_mapping({"agents": [{"id": "r", "kind": "random"}]})
        monkeypatch.setenv("RHNEAT_OUTPUT_DIR", str(tmp_path / "env"))
        assert resolve_output_dir(cfg) == tmp_path / "env"
        assert resolve_output_dir(cfg, tmp_path / "cli") == tmp_path / "cli"
        pinned = cfg.model_copy(update={"output_dir": tmp_path / "cfg"})
        assert resolve_output_dir(pinned) == tmp_path / "cfg"


@pytest.mark.unit
class TestRunEpisode:
    RANDOM = AgentSpec(id="random", kind=AgentKind.RANDOM)

    def test_random_agent_finishes(self):
        res = run_episode(self.RANDOM, "collect", 0, seed=1)
        assert res.ticks <= 500
        assert res.fm_calls == 0
        assert res.error == ""
        assert res.wall_time is None

    def test_deterministic(self):
        spec = AgentSpec(id="rhea", kind=AgentKind.RHEA)
        assert run_episode(spec, "race", 1, seed=4, budget=300) == run_episode(
            spec, "race", 1, seed=4, budget=300
        )

    def test_mcts_wins_the_corridor(self):
        res = run_episode(AgentSpec(id="mcts", kind=AgentKind.MCTS), "corridor", 1, seed=2)
        assert res.win
        assert res.score == 1.0
        assert 0 < res.fm_calls <= 1000 * res.ticks

    def test_frames_are_reported(self):
        frames = []
        run_episode(self.RANDOM, "corridor", 0, seed=3, on_frame=lambda s, a: frames.append(s.tick))
        assert frames == list(range(len(frames)))

    def test_agent_errors_end_the_episode(self, mocker):
        mocker.patch("rhneat.agents.random_agent.RandomAgent.act", side_effect=RuntimeError("boom"))
        res = run_episode(self.RANDOM, "corridor", 0, seed=3)
        assert not res.win
        assert res.error == "RuntimeError: boom"
        assert res.ticks == 0

    def test_wall_time_on_request(self):
        assert run_episode(self.RANDOM, "corridor", 0, seed=3, record_wall_time=True).wall_time >= 0.0


@pytest.mark.unit
def test_yaml_dump_is_plain_data():
    data = yaml.safe_load(ablation_grid("fitness", games=["trap"]).to_yaml())
    assert data["games"] == ["trap"]
    assert [a["id"] for a in data["agents"]] == ["rhneat+sp+cp", "rhneat-avg", "rhneat-lr"]
