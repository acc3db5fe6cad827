"""Meander knots and links: enumeration, censuses, invariants and algebra."""
from .arch import ArchConfiguration, DecoratedDyckWord, dyck_decode, dyck_encode, dyck_words
from .catalog import entries, load_catalog, lookup
from .classify import (CensusRow, census_meander_knots, census_meander_links,
                       census_multicomponent, lookup_name)
from .diagram import (Diagram, DTCode, GaussCode, analyze, checkerboard_faces, close_open_meander,
                      find_ordered_form, from_dt_code, realize_gauss_code, to_dt_code)
from .errors import (DomainError, MalformedInputError, MeanderKnotsError, NotAMeanderError,
                     ParityError, RealizabilityError)
from .invariants import (Fingerprint, determinant, fingerprint, jones_polynomial,
                         kauffman_bracket)
from .meander import OpenMeander, count_open_meanders, enumerate_open_meanders, open_meander

__version__ = "0.1.0"
