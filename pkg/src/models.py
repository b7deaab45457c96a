"""
Data models for the DRG evaluation toolkit using Pydantic.
"""

import hashlib
import re
from enum import Enum
from typing import Annotated, Dict, FrozenSet, Iterable, Iterator, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from config.constants import BOX_LABEL, DEFAULT_DISCOURSE, DEFAULT_OPERATORS

SYNSET_PATTERN = re.compile(r"^(?P<lemma>.+)\.(?P<pos>[nvar])\.(?P<sense>\d{2})$")


class SynsetId(BaseModel):
    """A WordNet concept label such as ``read.v.01``."""
    model_config = ConfigDict(frozen=True)

    lemma: str = Field(min_length=1)
    pos: Literal['n', 'v', 'a', 'r']
    sense: int = Field(ge=1, le=99)

    @classmethod
    def parse(cls, text: str) -> Optional["SynsetId"]:
        """Parse ``lemma.pos.NN``; the lemma is split off from the right so it may contain dots."""
        match = SYNSET_PATTERN.match(text)
        if not match or match.group('sense') == '00':
            return None
        return cls(lemma=match.group('lemma'), pos=match.group('pos'), sense=int(match.group('sense')))

    @property
    def sense_label(self) -> str:
        return f"{self.sense:02d}"

    @property
    def without_sense(self) -> str:
        return f"{self.lemma}.{self.pos}"

    def __str__(self) -> str:
        return f"{self.lemma}.{self.pos}.{self.sense:02d}"


class ConceptNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    synset: SynsetId


class BoxNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str


class NodeTarget(BaseModel):
    """Edge target pointing at another node of the graph."""
    model_config = ConfigDict(frozen=True)

    kind: Literal['node'] = 'node'
    node: str


class ConstantTarget(BaseModel):
    """Bare constant such as ``now``, ``speaker``, ``?`` or a numeral."""
    model_config = ConfigDict(frozen=True)

    kind: Literal['constant'] = 'constant'
    value: str


class LiteralTarget(BaseModel):
    """Double-quoted string; stored without the quotes."""
    model_config = ConfigDict(frozen=True)

    kind: Literal['literal'] = 'literal'
    value: str

    @property
    def quoted(self) -> str:
        return f'"{self.value}"'


Target = Annotated[Union[NodeTarget, ConstantTarget, LiteralTarget], Field(discriminator='kind')]


class EdgeKind(str, Enum):
    ROLE = "Role"
    OPERATOR = "Operator"
    NAME = "Name"
    MEMBER = "Member"
    DISCOURSE = "Discourse"


class Edge(BaseModel):
    model_config = ConfigDict(frozen=True)

    source: str
    label: str
    kind: EdgeKind
    target: Target

    @property
    def target_node(self) -> Optional[str]:
        """Node id of the target, or None for constants and literals."""
        if isinstance(self.target, NodeTarget):
            return self.target.node
        return None


class Drg(BaseModel):
    """Discourse Representation Graph: boxes, concepts and typed edges in document order."""
    model_config = ConfigDict(frozen=True)

    concepts: Tuple[ConceptNode, ...] = ()
    boxes: Tuple[BoxNode, ...] = ()
    edges: Tuple[Edge, ...] = ()
    origin: str = ""

    def concept_ids(self) -> List[str]:
        return [c.id for c in self.concepts]

    def box_ids(self) -> List[str]:
        return [b.id for b in self.boxes]

    def concept(self, node_id: str) -> Optional[ConceptNode]:
        for concept in self.concepts:
            if concept.id == node_id:
                return concept
        return None

    def node_label(self, node_id: str) -> str:
        """Label used when anchoring edges: the synset text for concepts, ``box`` for boxes."""
        concept = self.concept(node_id)
        if concept is not None:
            return str(concept.synset)
        return BOX_LABEL

    def edges_of_kind(self, *kinds: EdgeKind) -> Iterator[Edge]:
        return (e for e in self.edges if e.kind in kinds)

    def outgoing(self, node_id: str) -> List[Edge]:
        return [e for e in self.edges if e.source == node_id]


class Issue(BaseModel):
    """One validation finding; position is the index of the offending edge or node."""
    position: int
    code: str
    message: str


class WellFormedReport(BaseModel):
    errors: List[Issue] = []
    warnings: List[Issue] = []
    origin: str = ""

    @computed_field
    @property
    def well_formed(self) -> bool:
        return not self.errors


class Granularity(str, Enum):
    FINE = "fine"
    COARSE = "coarse"


class Category(str, Enum):
    """Triple categories removable for graph-level ablations."""
    ROLES = "roles"
    DISCOURSE = "discourse"
    OPERATORS = "operators"
    SENSES = "senses"


class TripleForm(str, Enum):
    INSTANCE = "instance"
    RELATION = "relation"
    ATTRIBUTE = "attribute"


class Triple(BaseModel):
    """A (var, label, target) fact; target is empty for Instance triples."""
    model_config = ConfigDict(frozen=True)

    form: TripleForm
    var: str
    label: str
    target: str = ""

    @classmethod
    def instance(cls, var: str, label: str) -> "Triple":
        return cls(form=TripleForm.INSTANCE, var=var, label=label)

    @classmethod
    def relation(cls, var: str, label: str, other: str) -> "Triple":
        return cls(form=TripleForm.RELATION, var=var, label=label, target=other)

    @classmethod
    def attribute(cls, var: str, label: str, value: str) -> "Triple":
        return cls(form=TripleForm.ATTRIBUTE, var=var, label=label, target=value)


class TripleSet(BaseModel):
    model_config = ConfigDict(frozen=True)

    triples: Tuple[Triple, ...] = ()

    @computed_field
    @property
    def var_count(self) -> int:
        return sum(1 for t in self.triples if t.form == TripleForm.INSTANCE)

    def variables(self) -> List[str]:
        """Variables in declaration order."""
        return [t.var for t in self.triples if t.form == TripleForm.INSTANCE]

    def instance_labels(self) -> Dict[str, str]:
        return {t.var: t.label for t in self.triples if t.form == TripleForm.INSTANCE}

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.triples)


class Score(BaseModel):
    """Precision/recall/F1 together with the counts they were computed from."""
    matched: int = Field(ge=0)
    pred_total: int = Field(ge=0)
    gold_total: int = Field(ge=0)
    precision: float = Field(ge=0.0, le=1.0)
    recall: float = Field(ge=0.0, le=1.0)
    f1: float = Field(ge=0.0, le=1.0)

    @classmethod
    def from_counts(cls, matched: int, pred_total: int, gold_total: int, **extra) -> "Score":
        if pred_total == 0 and gold_total == 0:
            precision = recall = f1 = 1.0
        else:
            precision = matched / pred_total if pred_total else 0.0
            recall = matched / gold_total if gold_total else 0.0
            f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
        return cls(
            matched=matched, pred_total=pred_total, gold_total=gold_total,
            precision=precision, recall=recall, f1=f1, **extra,
        )

    @classmethod
    def pooled(cls, scores: Iterable["Score"]) -> "Score":
        """Micro-aggregate: sum the counts, then compute P/R/F once."""
        matched = pred_total = gold_total = 0
        for score in scores:
            matched += score.matched
            pred_total += score.pred_total
            gold_total += score.gold_total
        return Score.from_counts(matched, pred_total, gold_total)


class MatchResult(Score):
    """Smatch result; mapping sends prediction variables to gold variables."""
    mapping: Dict[str, str] = {}


class GraphLevelScores(BaseModel):
    smatch_fine: Score
    smatch_coarse: Score
    no_roles: Score
    no_discourse: Score
    no_operators: Score
    no_senses: Score


class NodeLevelScores(BaseModel):
    names: Score
    negation: Score
    discourse: Score
    roles: Score
    members: Score
    concepts: Score
    concepts_noun: Score
    concepts_adj: Score
    concepts_adv: Score
    concepts_verb: Score


class EdgeLevelScores(BaseModel):
    roles: Score
    names: Score
    members: Score
    operators: Score
    discourse: Score


class ReportMetadata(BaseModel):
    """Provenance embedded in every report."""
    tool_version: str
    seed: int
    restarts: int
    operators_sha256: str
    discourse_sha256: str
    documents: int
    unparseable: List[int] = []
    aggregation: str = "micro"
    triple_matching: str = "multiset"
    negation_and_members: str = "unlabeled count"
    role_bag: str = "excludes Name and operator edges"


class FineGrainedReport(BaseModel):
    metadata: ReportMetadata
    graph_level: GraphLevelScores
    node_level: NodeLevelScores
    edge_level: EdgeLevelScores
    well_formed_rate: float = Field(ge=0.0, le=1.0)


class Vocabulary(BaseModel):
    """Operator and discourse label sets that drive token classification."""
    model_config = ConfigDict(frozen=True)

    operators: FrozenSet[str] = DEFAULT_OPERATORS
    discourse: FrozenSet[str] = DEFAULT_DISCOURSE

    @staticmethod
    def digest(labels: Iterable[str]) -> str:
        """Stable SHA-256 over the sorted, newline-joined labels."""
        return hashlib.sha256("\n".join(sorted(labels)).encode("utf-8")).hexdigest()

    @property
    def operators_sha256(self) -> str:
        return self.digest(self.operators)

    @property
    def discourse_sha256(self) -> str:
        return self.digest(self.discourse)


class SbnDocument(BaseModel):
    """One document of an SBN corpus file."""
    index: int
    id: str
    text: str


class ParallelSentence(BaseModel):
    id: str
    src_tokens: List[str] = Field(min_length=1)
    tgt_tokens: List[str] = Field(min_length=1)


class TranslationTable(BaseModel):
    """Lexical translation probabilities t(tgt | src), including the NULL source row."""
    probabilities: Dict[str, Dict[str, float]] = {}
    null_token: str

    def prob(self, tgt: str, src: str) -> float:
        return self.probabilities.get(src, {}).get(tgt, 0.0)


class AlignmentLink(BaseModel):
    """Target position linked to a source position, or to NULL when src_index is None."""
    model_config = ConfigDict(frozen=True)

    tgt_index: int = Field(ge=0)
    src_index: Optional[int] = Field(default=None, ge=0)


class NeFlag(str, Enum):
    EMPTY_TARGET = "EmptyTarget"
    CONTAINS_DIGITS_NOT_IN_SOURCE = "ContainsDigitsNotInSource"
    NOT_SUBSTRING_OF_TARGET = "NotSubstringOfTarget"
    DUPLICATE_TARGET = "DuplicateTarget"


class NeEntry(BaseModel):
    sentence_id: str
    src_literal: str = Field(min_length=1)
    tgt_literal: str = ""
    flags: Tuple[NeFlag, ...] = ()

    @field_validator('flags')
    @classmethod
    def sort_flags(cls, v: Tuple[NeFlag, ...]) -> Tuple[NeFlag, ...]:
        return tuple(sorted(set(v), key=lambda f: f.value))

    @property
    def flagged(self) -> bool:
        return bool(self.flags)


class NeDictionary(BaseModel):
    entries: List[NeEntry] = []

    def for_sentence(self, sentence_id: str) -> List[NeEntry]:
        return [e for e in self.entries if e.sentence_id == sentence_id]


class PatchEntry(BaseModel):
    """Manual correction: replace the literal of src_literal in document_id with tgt_literal."""
    document_id: str
    src_literal: str
    tgt_literal: str


class ReplacementAction(str, Enum):
    REPLACED = "Replaced"
    FLAGGED = "Flagged"
    NATIONALITY_SKIPPED = "NationalitySkipped"
    UNMATCHED = "Unmatched"
    PATCHED = "Patched"


class ReplacementRecord(BaseModel):
    src_literal: str
    tgt_literal: str = ""
    action: ReplacementAction
    flags: Tuple[NeFlag, ...] = ()


class ReplacementReport(BaseModel):
    document_id: str
    records: List[ReplacementRecord] = []

    def with_action(self, action: ReplacementAction) -> List[ReplacementRecord]:
        return [r for r in self.records if r.action == action]

    @property
    def replaced(self) -> List[ReplacementRecord]:
        return self.with_action(ReplacementAction.REPLACED) + self.with_action(ReplacementAction.PATCHED)

    @property
    def skipped(self) -> List[ReplacementRecord]:
        return self.with_action(ReplacementAction.FLAGGED) + self.with_action(ReplacementAction.NATIONALITY_SKIPPED)

    @property
    def unmatched(self) -> List[ReplacementRecord]:
        return self.with_action(ReplacementAction.UNMATCHED)


class RunConfig(BaseModel):
    """Options of one command-line run; embedded in outputs for reproducibility."""
    subcommand: str
    inputs: List[str] = []
    granularity: Granularity = Granularity.COARSE
    restarts: int = Field(default=4, ge=1)
    seed: int = 0
    operators_path: Optional[str] = None
    discourse_path: Optional[str] = None
    output_format: Literal['json', 'tsv', 'md'] = 'json'
    jobs: int = Field(default=1, ge=1)
