def test_imports_smoke() -> None:
    __import__("coxeter")
    __import__("conegeom")
    __import__("genfunc")
    __import__("oracle")
    __import__("identities")
    __import__("cli")
    __import__("config")
    __import__("monitoring")
    __import__("validation")


def test_package_versions() -> None:
    import cli
    import conegeom
    import coxeter
    import genfunc
    import identities
    import oracle

    from tests.assertions import require

    for package in (coxeter, conegeom, genfunc, oracle, identities, cli):
        require(package.get_version().endswith("0.1.0"), f"{package.__name__} version")
