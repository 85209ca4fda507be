import fraclap


def test_version():
    version = fraclap.__version__
    assert isinstance(version, str)
    assert isinstance(fraclap.short_version, str)
    assert fraclap.short_version in version and '+' in version
