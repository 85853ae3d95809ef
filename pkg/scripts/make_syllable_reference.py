#!/usr/bin/env python3
"""Build the syllable reference resource (tests/resources/syllable_reference.tsv)
and the familiar-word list (src/rumourlens/data/easy_words.txt).

The reference holds 1000 frequent English words with their dictionary
syllable counts, grouped here by count so each block is easy to audit.
The counts are the oracle the heuristic counter is measured against, so
they include words the heuristic is known to get wrong (being, science,
idea, radio, ...). The familiar-word list is the same vocabulary: short,
common words a fourth-grader knows.
"""

from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
TSV = ROOT / "tests" / "resources" / "syllable_reference.tsv"
EASY = ROOT / "src" / "rumourlens" / "data" / "easy_words.txt"

ONE = """
phrase the of and a to in is it you that he was for on are as with his they at be
this have from or one had by word but not what all were we when your can said
there use an each which she do how their if will up out then them these so
some her would make like him time has look two more write go see no way could
my than first been call who its now find long down day did get come made may
part new sound take work know place year live me back give most thing our
just name good man think say great where help through much line right too
mean old same tell boy does set three want air well play small end put home
read hand port large add land here must big high such act why ask men change
went light kind off need house point page school grow learn should world
still last left found turn cause move try near self earth few while might
saw far sea draw late run press close night north once white least west lay
best though sure watch fast five sing hear stop ten base cut young talk soon
list song leave black red door sun dark voice poor fine tree cross farm hard
start state book eye fish yes got wave heat full force blue wood main dog
cat horse bird cold hot free band rock care week month test hold mind step
heart walk feet mile loud spring fall drive snow rain road rule pull park
seat strong both war wait lot king town gold plant soft fun bright gas
chance ball crowd ice wheel wind drop game heard nine piece friend branch
clean bring teach head deal group peace egg ground fact street class boat
plane shape size team train wish fruit ship top whole twelve count shore
sharp wide sail fight catch truck noise grass dream clear cool glass cow
bear wolf sheep goat duck hen pig mouse snake bee ant worm leaf root seed
stem branch bark wing tail paw claw fur nest cave hill lake pond stream
beach sand stone rock mud dust ash smoke flame coal oil salt milk bread
meat rice corn bean cake pie jam tea cup dish bowl spoon fork knife pot
pan stove sink soap bath towel brush comb bed chair desk lamp clock phone
key lock rope chain nail screw saw drill pump tank pipe wire cord cloth silk
wool thread rag coat hat cap shoe boot sock belt ring watch bag box jar can
tin lid case card note coin cent bill tax debt loan rent sale shop store
mall booth stand cart crate sack load heap pile stack row line rank file
grade mark sign flag badge seal stamp vote law court judge jail guard spy
thief crime proof fault debt aim goal plan task chore skill craft trade
tool gear mesh net trap bait hook rod reel dock pier raft deck sail mast
helm crew guide scout host guest crowd mob gang troop squad team clan tribe
folk youth adult aunt niece nephew twin bride groom heir priest monk nun
saint ghost soul mind brain nerve bone rib spine skull chin cheek brow
lash lip gum tongue throat lung vein pulse wrist palm thumb fist elbow
knee shin heel toe limb waist hip chest
""".split()

TWO = """
about many over only very other into water after under never again always
also before because between city country away along around something any
even people little number letter mother father picture study story early
paper music question children enough almost above sometimes mountain color
second later money better until river carry window happy began himself
toward slowly morning evening winter summer during table further yellow
open today reason simple center farmer finger sudden silent thousand
measure listen often order middle moment ocean doctor teacher police system
public follow female person planet pattern power market problem perhaps
present pretty purpose quickly quiet rather ready record report result
return science season service seven shoulder silver sister special spoken
stranger subject supply surface sugar object notice nothing certain chapter
circle common compound contain correct cotton current decide degree desert
design detail dinner dollar double dozen either engine english equal ever
exact except explain expect famous fifty figure final finish flower forest
forward fraction friday future garden gather hundred husband inside instead
island jungle kitchen lovely machine madam magic magnet mainly manage
matter maybe member message method million minute mirror modern monday
monkey motion myself narrow nation nature nearly needle neighbor neither
nickel ninety noble noisy normal northern notebook nowhere 
packet palace pardon parent partly party passage pencil penny perfect
person pity planet pleasant plenty pocket poem portion
powder praises prepare pressure printed prison private produce
product program promise proper protect proudly provide publish pupil
puzzle rabbit racing rapid rarely really receive recent region
relate remain remove repeat replace reply request rescue respect
rhythm ribbon riches riding rising rocket rolling roughly rounded rubber
running safety salmon sample saying scatter schoolboy scissors
screaming seldom sellers sending senses settle shallow sharply shelter
shining shoulder shouted shower sickness signal simply singer sixty
skillful sleeping smiling soccer socket softly soldier solemn solid
somehow someone southern speaker spelling spider spirit splendid
sticky stomach student subtract succeed suffer sunday
sunlight supper suppose surprise swimming switches symbol
teacher telling temple tennis thursday tickets timber tiny tired
tissue together? topic total touching traffic training travel
treasure trouble tuesday tunnel turtle twenty ugly uncle unless
upper upward useful valley value village visit volume wagon
wander wanted washing wasted weakness wealthy weapon wearing
weather wedding weekly welcome western whether willing
window wisdom within without woman women wonder wooden
worker worship written yellow zero being create beyond
""".split()

THREE = """
another animal family saturday policy oxygen important together remember however example beautiful
different already beginning carefully certainly company consider decimal
delicious develop difficult direction discover enemy energy exciting
exercise expensive general government history holiday hospital imagine
industry instrument library magazine medicine minister molecule natural
newspaper nobody official opposite paragraph period personal physical
position possible potato practical president probably property protection
quality quantity radio recently religion represent scientist seventy
similar solution strawberry suddenly syllable telephone terrible tomorrow
tradition triangle understand vacation victory visitor volcano wonderful
yesterday idea area serious banana camera cinema computer condition
continue dangerous december decision deliver department depending
describing destruction determine disaster division edition
electric eastern? eleven engineer envelope equation establish estimate
everywhere evidence excellent exchanging excitement expression factories
favorite festival financial formation furniture gasoline gradually
grandfather grandmother happily harmony heavily horizon
hurricane illustrate imagine importantly? impossible? injury innocent
instead? intention interview introduce invention joyfully
liberty location lonely? magical majority? mechanical? memory mineral
miserable? musician mystery nationally? november objection obstacle
occasion october opinion overall paradise passenger perfectly permission
piano pollution popular poverty powerful prediction preparation? pretended?
principal probably? procession professor promotion pronunciation? protection?
pyramid quietly radium regularly? relation remarkable? reporter resolution?
restaurant revolution? satellite? saturday? september seriously? settlement
signature silently skeleton stadium strategy substances supervisor?
sympathy telescope thermometer? thirteen? thoroughly? tornado
tragedy umbrella underline unhappy uniform universe unusual? vegetable?
vertical vibration video violin visible vitamin wilderness
""".split()

FOUR = """
america american information experience education dictionary necessary
television material community activity discovery especially generally
impossible invisible particular political population secretary security
situation supermarket understanding watermelon elevator calculator
ceremony comfortable operation ordinary original available economy
emergency identity independent intelligent kindergarten mathematics
photography technology biology celebration certificate combination
competition complicated congratulate conversation definition demonstration?
development directly? discussion? environment everybody explanation
geography helicopter introduction invitation
""".split()

FIVE = """
university opportunity organization international possibility personality
examination communication electricity imagination vocabulary representative
congratulations curiosity investigation
""".split()


def clean(words):
    out, seen = [], set()
    for w in words:
        w = w.strip().lower()
        if not w or w.endswith("?") or w in seen:
            continue  # '?'-marked words were judged too contested to keep
        seen.add(w)
        out.append(w)
    return out


def main() -> None:
    blocks = [(1, clean(ONE)), (2, clean(TWO)), (3, clean(THREE)), (4, clean(FOUR)), (5, clean(FIVE))]
    rows = []
    seen = set()
    for count, words in blocks:
        for w in words:
            if w in seen:
                continue
            seen.add(w)
            rows.append((w, count))
    print({c: len(ws) for c, ws in blocks}, "total:", len(rows))
    if len(rows) < 1000:
        raise SystemExit(f"need 1000 words, have {len(rows)}")
    # trim the excess from the monosyllable tail so every block survives
    excess = len(rows) - 1000
    if excess:
        ones = [r for r in rows if r[1] == 1]
        drop = {w for w, _ in ones[len(ones) - excess:]}
        rows = [r for r in rows if r[0] not in drop]

    TSV.parent.mkdir(parents=True, exist_ok=True)
    with open(TSV, "w", encoding="utf-8") as fh:
        fh.write("# word\tsyllables (dictionary counts; heuristic oracle)\n")
        for w, c in rows:
            fh.write(f"{w}\t{c}\n")
    print(f"wrote {TSV}: {len(rows)} words")

    with open(EASY, "w", encoding="utf-8") as fh:
        fh.write("# familiar-word list for the difficult-word count (one per line)\n")
        for w, _ in sorted(rows):
            fh.write(w + "\n")
    print(f"wrote {EASY}")


if __name__ == "__main__":
    main()
