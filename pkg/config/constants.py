"""
Constants used throughout the DRG evaluation toolkit.
"""

from typing import Dict, FrozenSet, List, Tuple

# Comparison operators recognised as edge labels
DEFAULT_OPERATORS: FrozenSet[str] = frozenset({
    'EQU', 'NEQ', 'APX', 'LES', 'LEQ',
    'TPR', 'TAB', 'TIN', 'TSU', 'TCT',   # temporal
    'SXP', 'SXN', 'SXY', 'SZP', 'SZN',   # spatial
})

# Discourse relations introducing a new box
DEFAULT_DISCOURSE: FrozenSet[str] = frozenset({
    'NEGATION', 'CONTINUATION', 'CONTRAST', 'ATTRIBUTION', 'POSSIBILITY',
    'NECESSITY', 'RESULT', 'EXPLANATION', 'CONDITION', 'CONSEQUENCE',
    'ALTERNATION', 'COMMENTARY',
})

# Fixed labels of the graph form
NAME_LABEL = 'Name'
MEMBER_LABEL = 'member'
BOX_LABEL = 'box'
NEGATION_LABEL = 'NEGATION'

# Fine-grained synset split (instance label + three attributes)
FINE_SYNSET_LABEL = 'synset'
FINE_SYNSET_ATTRIBUTES: Tuple[str, str, str] = ('lemma', 'pos', 'sense')

# Variable prefixes used when rendering a DRG as triples
VARIABLE_PREFIXES: Dict[str, str] = {
    'box': 'b',
    'concept': 'c',
    'constant': 'k',
}

# WordNet parts of speech and the report bucket each one feeds
POS_TAGS: FrozenSet[str] = frozenset({'n', 'v', 'a', 'r'})
POS_BUCKETS: Dict[str, str] = {
    'n': 'concepts_noun',
    'a': 'concepts_adj',
    'r': 'concepts_adv',
    'v': 'concepts_verb',
}

# Constants that may appear bare in target position
KNOWN_CONSTANTS: FrozenSet[str] = frozenset({'speaker', 'hearer', 'now', '?'})

# Placeholder source token for target words aligned to nothing
NULL_TOKEN = '<NULL>'

# Synset whose Name edge is a nationality when reached through a Source role
NATIONALITY_SYNSET = 'country.n.02'
NATIONALITY_ROLE = 'Source'

# Corpus file conventions
COMMENT_CHAR = '%'
DOCUMENT_ID_PREFIX = 'id:'

# TSV headers for the file formats the toolkit writes
TSV_HEADERS: Dict[str, List[str]] = {
    'triples': ['var', 'label', 'target', 'form'],
    'report': ['level', 'metric', 'precision', 'recall', 'f1'],
    'table': ['src', 'tgt', 'prob'],
    'dictionary': ['id', 'src', 'tgt', 'flags'],
    'patch': ['id', 'src', 'tgt'],
    'alignment': ['id', 'tgt_index', 'src_index'],
    'audit': ['id', 'src', 'tgt', 'flags', 'action'],
}

# Report sections in the order they are rendered
GRAPH_LEVEL_METRICS: List[str] = [
    'smatch_fine', 'smatch_coarse', 'no_roles', 'no_discourse', 'no_operators', 'no_senses',
]
NODE_LEVEL_METRICS: List[str] = [
    'names', 'negation', 'discourse', 'roles', 'members', 'concepts',
    'concepts_noun', 'concepts_adj', 'concepts_adv', 'concepts_verb',
]
EDGE_LEVEL_METRICS: List[str] = ['roles', 'names', 'members', 'operators', 'discourse']

# Display names for the markdown/terminal tables
METRIC_DISPLAY_NAMES: Dict[str, str] = {
    'smatch_fine': 'Smatch (fine)',
    'smatch_coarse': 'Smatch (coarse)',
    'no_roles': 'No Roles',
    'no_discourse': 'No Discourse',
    'no_operators': 'No Operators',
    'no_senses': 'No Senses',
    'names': 'Names',
    'negation': 'Negation',
    'discourse': 'Discourse',
    'roles': 'Roles',
    'members': 'Members',
    'operators': 'Operators',
    'concepts': 'Concepts',
    'concepts_noun': 'noun',
    'concepts_adj': 'adj',
    'concepts_adv': 'adv',
    'concepts_verb': 'verb',
}

# Choices for command-line options
OUTPUT_FORMATS: List[str] = ['json', 'tsv', 'md']
GRANULARITIES: List[str] = ['fine', 'coarse']
CONVERT_TARGETS: List[str] = ['penman', 'triples', 'sbn']

# Error messages
ERROR_MESSAGES: Dict[str, str] = {
    'UNTERMINATED_LITERAL': 'Literal opened at token {position} is never closed',
    'UNKNOWN_TOKEN': "Cannot classify token '{token}' at position {position}",
    'DANGLING_NODE_REF': "Node reference '{token}' at position {position} points outside the document",
    'DANGLING_BOX_REF': "Box reference '{token}' at position {position} points to a box that does not exist",
    'ODD_EDGE_TOKENS': "Edge label '{token}' at position {position} has no target",
    'EMPTY_DOCUMENT': 'Document contains no tokens',
    'LENGTH_MISMATCH': 'Prediction corpus has {pred} documents but gold corpus has {gold}',
    'TOO_LARGE': 'Exhaustive matching limited to {max_vars} variables, got {size}',
    'UNKNOWN_CATEGORY': "Unknown category '{category}'",
}

# Warnings and error codes emitted by validation
VALIDATION_CODES: Dict[str, str] = {
    'EmptyNameLiteral': 'Name edge of {node} has an empty literal',
    'IsolatedConcept': 'Concept {node} takes part in no role, operator or name edge',
    'MissingRootBox': 'Document has concepts but no box b0',
    'MissingMember': 'Concept {node} is not a member of any box',
    'DuplicateMember': 'Concept {node} is a member of {count} boxes',
    'OrphanBox': 'Box {node} has no incoming discourse edge',
    'MultipleParents': 'Box {node} has {count} incoming discourse edges',
    'RootHasParent': 'Root box b0 has an incoming discourse edge',
    'BoxCycle': 'Discourse edges form a cycle through {node}',
    'DanglingNode': 'Edge {edge} refers to unknown node {node}',
    'KindMismatch': 'Edge {edge} is typed {kind} but its label or endpoints say otherwise',
    'BadTarget': 'Edge {edge} of kind {kind} cannot point to a {target}',
    'OrderViolation': 'Node {node} is out of document order',
}
