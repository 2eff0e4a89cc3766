from pyteach.testing import appendix, options, rng, warmuth


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: mark tests that take long to run")
