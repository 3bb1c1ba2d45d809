from fcplat.corpus import CorpusConfig, generate_corpus


def test_corpus_is_deterministic():
    cfg = CorpusConfig(seed=7, count=25)
    a = generate_corpus(cfg)
    b = generate_corpus(CorpusConfig(seed=7, count=25))
    assert [e.key for e in a] == [e.key for e in b]


def test_corpus_respects_caps():
    cfg = CorpusConfig(seed=3, count=30)
    entries = generate_corpus(cfg)
    assert len(entries) == 30
    for e in entries:
        assert e.ext.top.size <= cfg.max_size
        assert e.ext.bottom.size < e.ext.top.size
        assert e.lattice.node_count() <= cfg.max_nodes
        assert e.lattice.bottom == e.ext.bottom


def test_different_seeds_differ():
    a = generate_corpus(CorpusConfig(seed=1, count=10))
    b = generate_corpus(CorpusConfig(seed=2, count=10))
    assert [e.key for e in a] != [e.key for e in b]
