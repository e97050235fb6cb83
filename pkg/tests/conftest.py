import pytest

import helpers


@pytest.fixture(params=helpers.ALL_GROUPS, ids=lambda gd: gd.name)
def any_group(request):
    return request.param


@pytest.fixture(params=helpers.FIXTURE_NAMES)
def fixture_doc(request):
    from chevalley_chow.formats import parse_descriptor

    return parse_descriptor(helpers.fixture_bytes(request.param))
