from .ambiguity import Ambiguity, OVERLAP, INCLUSION, \
    closed_form_ambiguities, find_overlap_ambiguities, \
    find_inclusion_ambiguities, enumerate_ambiguities, ambiguities_frame
from .resolution import ResolutionTrace, resolve
from .compositions import a_units, b_units, compose_ab
from .resolution_table import RESOLUTION_TABLE, TableRow, replay_row, \
    verify_resolution_table
