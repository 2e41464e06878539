from rgcbench.workers import WorkerPool


def test_inline_map_keeps_order():
    pool = WorkerPool(1)
    assert pool.map(abs, [3, -1, -2]) == [3, 1, 2]
    assert pool.executor is None


def test_process_map_keeps_order():
    with WorkerPool(2, chunksize=2) as pool:
        assert pool.map(abs, range(-10, 0)) == list(range(10, 0, -1))
    assert pool._executor is None
