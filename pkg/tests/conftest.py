import pytest

from syntrees import parse_treebank

# "She stayed while I lit the fire ." with punctuation attached to the root.
FIG1_CONLLU = """\
# sent_id = written-demo-1
# text = She stayed while I lit the fire .
1\tShe\tshe\tPRON\t_\t_\t2\tnsubj\t_\t_
2\tstayed\tstay\tVERB\t_\t_\t0\troot\t_\t_
3\twhile\twhile\tSCONJ\t_\t_\t5\tmark\t_\t_
4\tI\tI\tPRON\t_\t_\t5\tnsubj\t_\t_
5\tlit\tlight\tVERB\t_\t_\t2\tadvcl\t_\t_
6\tthe\tthe\tDET\t_\t_\t7\tdet\t_\t_
7\tfire\tfire\tNOUN\t_\t_\t5\tobj\t_\t_
8\t.\t.\tPUNCT\t_\t_\t2\tpunct\t_\t_

"""

# "Yeah this is - this is great ." with a restart: the abandoned "this is"
# hangs off the repaired "this" via reparandum, "Yeah" is a discourse element.
FIG2_CONLLU = """\
# sent_id = spoken-demo-1
# text = Yeah this is – this is great .
1\tYeah\tyeah\tINTJ\t_\t_\t7\tdiscourse\t_\t_
2\tthis\tthis\tPRON\t_\t_\t5\treparandum\t_\t_
3\tis\tbe\tAUX\t_\t_\t2\tcop\t_\t_
4\t–\t–\tPUNCT\t_\t_\t7\tpunct\t_\t_
5\tthis\tthis\tPRON\t_\t_\t7\tnsubj\t_\t_
6\tis\tbe\tAUX\t_\t_\t7\tcop\t_\t_
7\tgreat\tgreat\tADJ\t_\t_\t0\troot\t_\t_
8\t.\t.\tPUNCT\t_\t_\t7\tpunct\t_\t_

"""


@pytest.fixture
def fig1_treebank():
    return parse_treebank(FIG1_CONLLU, "written-demo").treebank


@pytest.fixture
def fig1_sentence(fig1_treebank):
    return next(fig1_treebank.sentences())


@pytest.fixture
def fig2_treebank():
    return parse_treebank(FIG2_CONLLU, "spoken-demo").treebank


@pytest.fixture
def fig2_sentence(fig2_treebank):
    return next(fig2_treebank.sentences())
