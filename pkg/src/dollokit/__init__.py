"""Dollo-k parsimony on rooted binary phylogenetic trees."""
from .characters import CharacterVector, all_characters, parse_character, read_characters
from .counting import (CountTable, MemoTables, dollo_count, dollo_count_all,
                       dollo_count_n_minus_2, extended_count, independent_count)
from .errors import CapExceededError, DolloKitError, ParseError, ValidationError
from .fitch import (FitchResult, ScoreComparison, compare_scores, fig5_instance, fitch,
                    fitch_bottom_up, fitch_top_down, parsimony_score)
from .labeling import (DolloLabeling, OneTree, b_node, dollo_labeling, dollo_score,
                       fig2_instance, is_persistent, maximal_0B_nodes, one_tree)
from .newick import (LabelingReport, parse_newick, read_labeling_json, serialize_newick,
                     write_labeling)
from .tree import (RHO_PRIME, Node, Tree, TreeBuilder, enumerate_shapes,
                   generate_caterpillar, generate_fully_balanced, generate_semi_caterpillar,
                   is_caterpillar, is_semi_caterpillar, mrca, random_tree, sackin_index,
                   standard_decomposition)

__version__ = "0.1.0"
