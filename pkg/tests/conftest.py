"""Shared fixtures: SBN documents, parallel corpora and a synthetic name-projection corpus."""
import pytest

from src.models import ParallelSentence, SbnDocument, TranslationTable
from src.sbn.corpus import render_corpus

# A gold document with the output of an English parser, a Chinese parser, and
# an English parser run on a machine translation of the Chinese sentence
MUSIC_LURE = {
    'gold': 'music.n.01 NEGATION <1 person.n.01 NEGATION <1 lure.v.01 Agent -2 Patient -1 Time +1 time.n.08 TPR now',
    'en': 'music.n.01 NEGATION <1 person.n.01 NEGATION <1 surprise.v.02 Stimulus -2 Experiencer -1 Time +1 time.n.08 EQU now',
    'zh': 'music.n.01 NEGATION <1 person.n.01 NEGATION <1 appeal.v.01 Agent -2 Theme -1 Time +1 time.n.08 TPR now',
    'zh_en': 'event.v.01 Participant +1 music.n.01 appeal.v.01 Theme -1',
}

HANDY_SAW = {
    'gold': 'female.n.02 time.n.08 EQU now very.r.01 handy.a.03 AttributeOf -3 Time -2 Degree -1 Instrument +1 saw.n.02',
    'en': 'female.n.02 time.n.08 EQU now very.r.01 handy.a.01 AttributeOf -3 Time -2 Degree -1 Instrument +1 saw.n.02',
    'zh': 'female.n.02 time.n.08 TSU now use.v.01 Agent -2 Time -1 Theme +1 Instrument +2 entity.n.01 saw.n.02',
    'zh_en': 'female.n.02 time.n.08 EQU now good.a.01 AttributeOf -2 Time -1 Instrument +1 saw.n.02',
}

# Name-projection error classes: (wrong output, corrected output)
NAME_ERRORS = {
    'dislocation': (
        'male.n.02 Name "梅尔·卡玛津" be.v.08 Theme -1 Time +1 Co-Theme +2 time.n.08 EQU now '
        'person.n.01 Role +1 executive.n.01 Of +1 company.n.01 Name "执行官"',
        'male.n.02 Name "梅尔·卡玛津" be.v.08 Theme -1 Time +1 Co-Theme +2 time.n.08 EQU now '
        'person.n.01 Role +1 executive.n.01 Of +1 company.n.01 Name "天狼星"',
    ),
    'character_exclusion': (
        'group.n.01 Name ? sing.v.02 Agent -1 Time +1 Theme +2 time.n.08 TPR now '
        'song.n.01 EQU +1 music.n.01 Name "快乐一起"',
        'group.n.01 Name ? sing.v.02 Agent -1 Time +1 Theme +2 time.n.08 TPR now '
        'song.n.01 EQU +1 music.n.01 Name "快乐在一起"',
    ),
    'character_inclusion': (
        'male.n.02 Name "卢瑟福·海斯1822" time.n.08 TPR now bear.v.02 Patient -2 Location +1 Time +2 '
        'state.n.01 Name "俄亥俄州" time.n.08 YearOfCentury 1822 TIN -3',
        'male.n.02 Name "卢瑟福·海斯" time.n.08 TPR now bear.v.02 Patient -2 Location +1 Time +2 '
        'state.n.01 Name "俄亥俄州" time.n.08 YearOfCentury 1822 TIN -3',
    ),
    'nationality': (
        'person.n.01 EQU speaker NEGATION <1 time.n.08 EQU now be.v.03 Theme -2 Time -1 Source +1 '
        'country.n.02 Name ""',
        'person.n.01 EQU speaker NEGATION <1 time.n.08 EQU now be.v.03 Theme -2 Time -1 Source +1 '
        'country.n.02 Name "ireland"',
    ),
}

# "Tom doesn't spend much time in Boston"
TOM_BOSTON = (
    'male.n.02 Name "Tom" NEGATION <1 time.n.08 EQU now spend.v.02 Agent -2 Time -1 Theme +1 '
    'Location +2 time.n.01 city.n.01 Name "Boston"'
)

# "Yunus founded the Grameen Bank 30 years ago."
YUNUS_SBN = (
    'male.n.02 Name "Yunus" time.n.08 TPR now found.v.01 Agent -2 Time -1 Theme +1 '
    'bank.n.01 Name "Grameen"'
)
YUNUS_PAIR = ParallelSentence(
    id="0",
    src_tokens="Yunus founded the Grameen Bank 30 years ago .".split(),
    tgt_tokens="尤努斯 30 年前 创立 了 格莱美 银行 。".split(),
)

SAMPLE_DOCUMENTS = (
    list(MUSIC_LURE.values())
    + list(HANDY_SAW.values())
    + [doc for pair in NAME_ERRORS.values() for doc in pair]
    + [TOM_BOSTON, YUNUS_SBN]
)


@pytest.fixture
def sample_documents():
    return SAMPLE_DOCUMENTS


@pytest.fixture
def toy_corpus():
    """The classic two-sentence IBM Model 1 example."""
    return [
        ParallelSentence(id="1", src_tokens=["green", "house"], tgt_tokens=["casa", "verde"]),
        ParallelSentence(id="2", src_tokens=["the", "house"], tgt_tokens=["la", "casa"]),
    ]


@pytest.fixture
def yunus_corpus():
    """A founding sentence plus short sentences repeating each name."""
    return [
        YUNUS_PAIR,
        ParallelSentence(id="1", src_tokens=["Yunus", "smiled"], tgt_tokens=["尤努斯", "笑"]),
        ParallelSentence(id="2", src_tokens=["Yunus", "slept"], tgt_tokens=["尤努斯", "睡"]),
        ParallelSentence(id="3", src_tokens=["Grameen", "grew"], tgt_tokens=["格莱美", "成长"]),
        ParallelSentence(id="4", src_tokens=["Grameen", "paid"], tgt_tokens=["格莱美", "付款"]),
    ]


NAME_POOL = [
    ("Anna", "安娜"), ("Bob", "鲍勃"), ("Carl", "卡尔"), ("David", "大卫"), ("Emma", "艾玛"),
    ("Frank", "弗兰克"), ("Grace", "格蕾丝"), ("Henry", "亨利"), ("Iris", "艾瑞斯"), ("Jack", "杰克"),
    ("Kate", "凯特"), ("Leo", "利奥"), ("Mia", "米娅"), ("Nick", "尼克"), ("Olga", "奥尔加"),
]

CLEAN_SENTENCES = 39


class SyntheticCorpus:
    """
    Fifty aligned sentences: 39 clean two-name sentences and eleven around the
    planted error cases.

    Every planted name occurs in at least three sentences or sits next to a word
    it always co-occurs with, so the errors come out of EM training the same way
    they come out of the hand-made ``table``.
    """

    def __init__(self):
        self.sentences = []
        self.sbn = []
        for i in range(CLEAN_SENTENCES):
            (a_en, a_zh), (b_en, b_zh) = NAME_POOL[i % 15], NAME_POOL[(i + 7) % 15]
            self.sentences.append(ParallelSentence(
                id=str(i), src_tokens=[a_en, "met", b_en], tgt_tokens=[a_zh, "见", "了", b_zh],
            ))
            self.sbn.append(
                f'male.n.02 Name "{a_en}" meet.v.01 Agent -1 Co-Agent +1 Time +2 '
                f'male.n.02 Name "{b_en}" time.n.08 TPR now'
            )

        planted = [
            # "El" and "Zorro" always co-occur, so the article takes every target word
            ("zorro", "El Zorro rides a horse", "佐罗 骑 马",
             'male.n.02 Name "Zorro" ride.v.01 Agent -1 Theme +1 horse.n.01'),
            # the year is pulled into the name span
            ("hayes", "Rutherford Hayes was born in 1822", "卢瑟福·海斯 1822 年 出生",
             'male.n.02 Name "Rutherford Hayes" bear.v.02 Patient -1 Time +1 time.n.08 YearOfCentury 1822'),
            # the middle character is aligned outside the name
            ("happy", "The group sings Happy Together", "乐队 唱 快乐 在 一起",
             'group.n.01 Name ? sing.v.02 Agent -1 Time +1 Theme +2 time.n.08 TPR now '
             'song.n.01 EQU +1 music.n.01 Name "Happy Together"'),
            (None, "Happy Together won", "快乐 一起 获胜",
             'group.n.01 Name "Happy Together" win.v.01 Agent -1'),
            (None, "Happy Together split", "快乐 一起 解散",
             'group.n.01 Name "Happy Together" split.v.01 Patient -1'),
            # the company receives the person's name
            ("karmazin", "Mel Karmazin runs Sirius", "卡玛津 经营 卡玛 津",
             'male.n.02 Name "Mel Karmazin" run.v.01 Agent -1 Theme +1 company.n.01 Name "Sirius"'),
            (None, "Mel Karmazin smiled", "卡玛津 微笑",
             'male.n.02 Name "Mel Karmazin" smile.v.01 Agent -1'),
            (None, "Mel Karmazin resigned", "卡玛津 辞职",
             'male.n.02 Name "Mel Karmazin" resign.v.01 Agent -1'),
            (None, "Sirius grew", "卡玛 津 成长",
             'company.n.01 Name "Sirius" grow.v.01 Patient -1'),
            (None, "Sirius paid", "卡玛 津 付款",
             'company.n.01 Name "Sirius" pay.v.01 Agent -1'),
            # nationality
            ("irish", "I am not Irish", "我 不是 爱尔兰人",
             'person.n.01 EQU speaker NEGATION <1 time.n.08 EQU now be.v.03 Theme -2 Time -1 Source +1 '
             'country.n.02 Name "ireland"'),
        ]
        for offset, (trigger, src, tgt, sbn) in enumerate(planted):
            sentence_id = str(CLEAN_SENTENCES + offset)
            self.sentences.append(ParallelSentence(id=sentence_id, src_tokens=src.split(), tgt_tokens=tgt.split()))
            self.sbn.append(sbn)
            if trigger:
                setattr(self, trigger, sentence_id)

        probabilities = {en: {zh: 1.0} for en, zh in NAME_POOL}
        probabilities.update({
            "met": {"见": 1.0},
            "rides": {"骑": 1.0},
            "horse": {"马": 1.0},
            "Hayes": {"卢瑟福·海斯": 0.6, "1822": 0.4},
            "1822": {"1822": 0.3, "年": 0.7},
            "born": {"出生": 1.0},
            "group": {"乐队": 1.0},
            "sings": {"唱": 1.0},
            "Happy": {"快乐": 1.0},
            "Together": {"一起": 1.0},
            "won": {"获胜": 1.0},
            "split": {"解散": 1.0},
            "Karmazin": {"卡玛津": 1.0},
            "runs": {"经营": 1.0},
            "smiled": {"微笑": 1.0},
            "resigned": {"辞职": 1.0},
            "Sirius": {"卡玛": 0.5, "津": 0.5},
            "grew": {"成长": 1.0},
            "paid": {"付款": 1.0},
            "<NULL>": {"了": 0.6, "在": 0.2, "我": 0.1, "不是": 0.1},
        })
        self.table = TranslationTable(probabilities=probabilities, null_token="<NULL>")

    @property
    def documents(self):
        return [SbnDocument(index=i, id=s.id, text=sbn) for i, (s, sbn) in enumerate(zip(self.sentences, self.sbn))]

    def corpus_text(self) -> str:
        return render_corpus([(s.id, sbn) for s, sbn in zip(self.sentences, self.sbn)])

    def parallel_text(self) -> str:
        return "".join(f"{s.id}\t{' '.join(s.src_tokens)}\t{' '.join(s.tgt_tokens)}\n" for s in self.sentences)


@pytest.fixture
def synthetic_corpus():
    return SyntheticCorpus()
