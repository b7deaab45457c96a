"""Tests for SBN tokenizing, parsing, validation and serialization."""
import pytest

from src.models import (
    BoxNode, ConceptNode, Drg, Edge, EdgeKind, LiteralTarget, NodeTarget, SynsetId, Vocabulary,
)
from src.sbn import (
    Slot, TokenClass, TokenContext, check_document, classify_token, load_vocabulary, parse_sbn,
    serialize_sbn, split_documents, tokenize_sbn, validate,
)
from src.sbn.corpus import read_label_file
from src.utils.error_handler import (
    CorpusFormatError, DanglingBoxRef, DanglingNodeRef, EmptyDocument, NotSerializableError,
    OddEdgeTokens, UnknownToken, UnterminatedLiteral,
)
from tests.conftest import MUSIC_LURE, NAME_ERRORS, SAMPLE_DOCUMENTS, TOM_BOSTON


def parse(text, vocabulary=None):
    return parse_sbn(tokenize_sbn(text), vocabulary)


def member(box, concept):
    return Edge(source=box, label="member", kind=EdgeKind.MEMBER, target=NodeTarget(node=concept))


def discourse(parent, child, label="NEGATION"):
    return Edge(source=parent, label=label, kind=EdgeKind.DISCOURSE, target=NodeTarget(node=child))


def concept(index, synset="person.n.01"):
    return ConceptNode(id=f"c{index}", synset=SynsetId.parse(synset))


def test_tokenize_keeps_literals_whole_and_drops_comments():
    """Quoted names with spaces are one token; % starts a comment."""
    tokens = tokenize_sbn('male.n.02 Name "Mel Karmazin" % the chief executive\nNEGATION <1')
    assert tokens == ['male.n.02', 'Name', '"Mel Karmazin"', 'NEGATION', '<1']


def test_tokenize_unterminated_literal():
    with pytest.raises(UnterminatedLiteral):
        tokenize_sbn('male.n.02 Name "Tom')


@pytest.mark.parametrize("token,slot,next_token,expected", [
    ("lure.v.01", Slot.NODE, None, TokenClass.SYNSET),
    ("NEGATION", Slot.EDGE, "<1", TokenClass.DISCOURSE_RELATION),
    ("Agent", Slot.EDGE, "-2", TokenClass.EDGE_LABEL),
    ("EQU", Slot.EDGE, "now", TokenClass.OPERATOR),
    ("-1", Slot.TARGET, None, TokenClass.NODE_REF),
    ("now", Slot.TARGET, None, TokenClass.CONSTANT),
    ("1822", Slot.TARGET, None, TokenClass.CONSTANT),
    ('"Tom"', Slot.TARGET, None, TokenClass.LITERAL),
    ("<1", Slot.EDGE, None, TokenClass.BOX_REF),
])
def test_classify_token(token, slot, next_token, expected):
    """Each token gets exactly one class given its position in the grammar."""
    assert classify_token(token, TokenContext(slot, 0, next_token)) == expected


@pytest.mark.parametrize("token,slot", [
    ('"Tom"', Slot.EDGE),
    ("+0", Slot.TARGET),
    ("lure.v.00", Slot.EDGE),
    ("agent", Slot.EDGE),
])
def test_classify_token_rejects(token, slot):
    with pytest.raises(UnknownToken):
        classify_token(token, TokenContext(slot, 3))


def test_negation_without_box_ref_is_a_role_label():
    """A discourse label is only a relation when a box reference follows."""
    assert classify_token("NEGATION", TokenContext(Slot.EDGE, 0, "-1")) == TokenClass.EDGE_LABEL


def test_parse_tom_boston():
    """Two boxes linked by NEGATION; the negated concepts sit in the second box."""
    drg = parse(TOM_BOSTON)

    assert [str(c.synset) for c in drg.concepts] == [
        'male.n.02', 'time.n.08', 'spend.v.02', 'time.n.01', 'city.n.01',
    ]
    assert drg.box_ids() == ['b0', 'b1']

    discourse_edges = list(drg.edges_of_kind(EdgeKind.DISCOURSE))
    assert [(e.source, e.label, e.target_node) for e in discourse_edges] == [('b0', 'NEGATION', 'b1')]

    members = {(e.source, e.target_node) for e in drg.edges_of_kind(EdgeKind.MEMBER)}
    assert members == {('b0', 'c0'), ('b1', 'c1'), ('b1', 'c2'), ('b1', 'c3'), ('b1', 'c4')}

    roles = {(e.source, e.label, e.target_node) for e in drg.edges_of_kind(EdgeKind.ROLE)}
    assert roles == {
        ('c2', 'Agent', 'c0'), ('c2', 'Time', 'c1'), ('c2', 'Theme', 'c3'), ('c2', 'Location', 'c4'),
    }

    names = [(e.source, e.target.value) for e in drg.edges_of_kind(EdgeKind.NAME)]
    assert names == [('c0', 'Tom'), ('c4', 'Boston')]

    operators = list(drg.edges_of_kind(EdgeKind.OPERATOR))
    assert len(operators) == 1
    assert operators[0].source == 'c1'
    assert operators[0].target.value == 'now'


def test_parse_music_lure():
    """Nested negation: each NEGATION <1 opens a new box under the previous one."""
    drg = parse(MUSIC_LURE['gold'])

    assert [str(c.synset) for c in drg.concepts] == ['music.n.01', 'person.n.01', 'lure.v.01', 'time.n.08']
    assert drg.box_ids() == ['b0', 'b1', 'b2']

    discourse_edges = [(e.source, e.label, e.target_node) for e in drg.edges_of_kind(EdgeKind.DISCOURSE)]
    assert discourse_edges == [('b0', 'NEGATION', 'b1'), ('b1', 'NEGATION', 'b2')]

    members = {(e.source, e.target_node) for e in drg.edges_of_kind(EdgeKind.MEMBER)}
    assert members == {('b0', 'c0'), ('b1', 'c1'), ('b2', 'c2'), ('b2', 'c3')}

    roles = [(e.source, e.label, e.target_node) for e in drg.edges_of_kind(EdgeKind.ROLE)]
    assert roles == [('c2', 'Agent', 'c0'), ('c2', 'Patient', 'c1'), ('c2', 'Time', 'c3')]

    operators = list(drg.edges_of_kind(EdgeKind.OPERATOR))
    assert [(e.source, e.label, e.target.kind, e.target.value) for e in operators] == [
        ('c3', 'TPR', 'constant', 'now'),
    ]


def test_parse_operator_with_node_target():
    """TIN -3 points back to another concept; YearOfCentury keeps its bare numeral."""
    drg = parse(NAME_ERRORS['character_inclusion'][1])
    tin = next(e for e in drg.edges if e.label == 'TIN')
    year = next(e for e in drg.edges if e.label == 'YearOfCentury')

    assert tin.kind == EdgeKind.OPERATOR
    assert (tin.source, tin.target_node) == ('c4', 'c1')
    assert year.kind == EdgeKind.ROLE
    assert year.target.value == '1822'


def test_parse_question_mark_name():
    """An unknown name is the bare constant ? rather than a literal."""
    drg = parse(NAME_ERRORS['character_exclusion'][1])
    name = next(drg.edges_of_kind(EdgeKind.NAME))
    assert name.target.kind == 'constant'
    assert name.target.value == '?'


def test_parse_spans_lines():
    """Line breaks and comments do not change the graph."""
    multi_line = (
        'male.n.02 Name "Tom"      % Tom\n'
        'NEGATION <1              % not\n'
        'time.n.08 EQU now\n'
        'spend.v.02 Agent -2 Time -1 Theme +1 Location +2\n'
        'time.n.01\n'
        'city.n.01 Name "Boston"\n'
    )
    assert parse(multi_line) == parse(TOM_BOSTON)


@pytest.mark.parametrize("text,error", [
    ("", EmptyDocument),
    ("% only a comment", EmptyDocument),
    ("music.n.01 Agent", OddEdgeTokens),
    ("music.n.01 Agent -3", DanglingNodeRef),
    ("music.n.01 NEGATION <3", DanglingBoxRef),
    ("music.n.01 <1", UnknownToken),
    ("music.n.01 Agent +0", UnknownToken),
    ("hello world", UnknownToken),
])
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse(text)


def test_custom_operator_vocabulary():
    """Without EQU in the operator set, EQU reads as a role label."""
    vocabulary = Vocabulary(operators=frozenset({'TPR'}))
    drg = parse('time.n.08 EQU now', vocabulary)
    assert drg.edges[-1].kind == EdgeKind.ROLE


@pytest.mark.parametrize("text", SAMPLE_DOCUMENTS)
def test_serialize_round_trip(text):
    """Writing a parsed document gives back its token sequence."""
    assert serialize_sbn(parse(text)) == " ".join(tokenize_sbn(text))


@pytest.mark.parametrize("text", SAMPLE_DOCUMENTS)
def test_sample_documents_are_well_formed(text):
    report = validate(parse(text))
    assert report.well_formed
    assert report.errors == []


def test_empty_name_literal_warning():
    """An empty Name literal is a warning only."""
    report = check_document(NAME_ERRORS['nationality'][0])
    assert report.well_formed
    assert [w.code for w in report.warnings] == ['EmptyNameLiteral']


def test_isolated_concept_warning():
    report = check_document('female.n.02 saw.n.02')
    assert report.well_formed
    assert [w.code for w in report.warnings] == ['IsolatedConcept', 'IsolatedConcept']


def test_check_document_reports_syntax_errors():
    report = check_document('music.n.01 Agent', origin='7')
    assert not report.well_formed
    assert report.errors[0].code == 'ODD_EDGE_TOKENS'
    assert report.origin == '7'


def test_validate_orphan_box():
    """A non-root box without an incoming discourse edge."""
    drg = Drg(
        boxes=(BoxNode(id='b0'), BoxNode(id='b1')),
        concepts=(concept(0),),
        edges=(member('b1', 'c0'),),
    )
    report = validate(drg)
    assert not report.well_formed
    assert 'OrphanBox' in [e.code for e in report.errors]


def test_validate_membership():
    drg = Drg(
        boxes=(BoxNode(id='b0'), BoxNode(id='b1')),
        concepts=(concept(0), concept(1)),
        edges=(member('b0', 'c0'), discourse('b0', 'b1'), member('b1', 'c0')),
    )
    codes = [e.code for e in validate(drg).errors]
    assert 'DuplicateMember' in codes
    assert 'MissingMember' in codes


def test_validate_box_cycle():
    drg = Drg(
        boxes=(BoxNode(id='b0'), BoxNode(id='b1'), BoxNode(id='b2')),
        concepts=(concept(0),),
        edges=(member('b0', 'c0'), discourse('b1', 'b2'), discourse('b2', 'b1')),
    )
    assert 'BoxCycle' in [e.code for e in validate(drg).errors]


def test_validate_kind_mismatch():
    """A Name edge leaving a box contradicts its kind."""
    drg = Drg(
        boxes=(BoxNode(id='b0'),),
        concepts=(concept(0),),
        edges=(
            member('b0', 'c0'),
            Edge(source='b0', label='Name', kind=EdgeKind.NAME, target=LiteralTarget(value='Tom')),
        ),
    )
    assert 'KindMismatch' in [e.code for e in validate(drg).errors]


def test_validate_bad_target():
    """Name edges take a literal or ?, never another node."""
    drg = Drg(
        boxes=(BoxNode(id='b0'),),
        concepts=(concept(0), concept(1)),
        edges=(
            member('b0', 'c0'),
            member('b0', 'c1'),
            Edge(source='c0', label='Name', kind=EdgeKind.NAME, target=NodeTarget(node='c1')),
        ),
    )
    assert [e.code for e in validate(drg).errors] == ['BadTarget']


def test_validate_dangling_node():
    drg = Drg(
        boxes=(BoxNode(id='b0'),),
        concepts=(concept(0),),
        edges=(
            member('b0', 'c0'),
            Edge(source='c0', label='Agent', kind=EdgeKind.ROLE, target=NodeTarget(node='c9')),
        ),
    )
    assert 'DanglingNode' in [e.code for e in validate(drg).errors]


def test_serialize_rejects_return_to_earlier_box():
    drg = Drg(
        boxes=(BoxNode(id='b0'), BoxNode(id='b1')),
        concepts=(concept(0), concept(1)),
        edges=(discourse('b0', 'b1'), member('b1', 'c0'), member('b0', 'c1')),
    )
    with pytest.raises(NotSerializableError):
        serialize_sbn(drg)


def test_split_documents_with_ids():
    text = (
        "% id: first\n"
        "female.n.02 time.n.08 EQU now\n"
        "\n"
        "% a header comment without id\n"
        "\n"
        "male.n.02 Name \"Tom\"\n"
    )
    documents = split_documents(text)
    assert [(d.index, d.id) for d in documents] == [(0, 'first'), (1, '1')]
    assert documents[1].text == 'male.n.02 Name "Tom"'


def test_read_label_file(tmp_path):
    path = tmp_path / "operators.txt"
    path.write_text("# comparison operators\nEQU\n\nTPR  # temporal\n", encoding="utf-8")
    assert read_label_file(path) == frozenset({'EQU', 'TPR'})

    vocabulary = load_vocabulary(operators_path=path)
    assert vocabulary.operators == frozenset({'EQU', 'TPR'})
    assert 'NEGATION' in vocabulary.discourse


def test_read_label_file_rejects_whitespace(tmp_path):
    path = tmp_path / "discourse.txt"
    path.write_text("NEGATION\nBAD LABEL\n", encoding="utf-8")
    with pytest.raises(CorpusFormatError):
        read_label_file(path)
