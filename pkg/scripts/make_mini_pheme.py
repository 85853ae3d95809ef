#!/usr/bin/env python3
"""Build the bundled mini corpus: fixtures/mini-pheme/ (tree layout),
fixtures/mini-pheme.jsonl (line-delimited export of the same content)
and fixtures/mini-pheme.manifest.json (hand-counted partition sizes).

Three synthetic events, ten threads each (five rumour, five non-rumour),
with reply counts chosen per thread. The texts exercise the extractors:
hashtags, mentions, URLs, emoji, numbers, negations, emotion words,
multi-word concepts, an empty reply and a punctuation-only reply.
"""

import json
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent / "fixtures"
TREE = ROOT / "mini-pheme"

# event -> label -> list of (source_text, [reply_texts])
CORPUS = {
    "parkfire": {
        "rumours": [
            ("BREAKING: explosion heard near the old mill park, people running from the gates in panic #parkfire",
             ["@newsdesk is this confirmed? I heard nothing from police",
              "Terrified for everyone there, my sister walks through that park 😨",
              "Not an explosion. A transformer blew, witnesses say. Stop spreading fear.",
              "RT this so people avoid the area!!"]),
            ("Unconfirmed reports say the park fire was started deliberately, possible arson attack #parkfire",
             ["Who would do such a horrible thing?",
              "No evidence of arson yet, the council says it was dry grass.",
              "This city is not safe anymore, honestly."]),
            ("People saying a second fire has broken out behind the museum, smoke everywhere http://pic.example/4416",
             ["I can see the smoke from my office window, it looks huge",
              "That picture is from the 2011 fire, not today. Fake.",
              "Praying for the firefighters 🙏",
              "Is the museum being evacuated? Anyone know?",
              "My kids school is two streets away, this is terrifying"]),
            ("Rumour going around that a firefighter is trapped inside the mill building #parkfire #pray",
             ["Please let this not be true",
              "Fire brigade denies anyone is trapped. Source: their official account."]),
            ("Hearing the whole east side of the park is gone, flames spreading to houses they say",
             ["We drove past, the fire is small and nowhere near the houses. Calm down.",
              "Where are you getting this from? No local news mentions houses.",
              "Insurance nightmare for those families if true 😢",
              "Stay safe everyone, do not go near the park tonight"]),
        ],
        "non-rumours": [
            ("Fire service confirms a small grass fire at mill park is under control. No injuries reported. http://news.example/fire",
             ["Good news, thanks for the update",
              "Great work by the crews as always 👏",
              "Was anyone hurt? Glad it was contained quickly."]),
            ("Mill park will stay closed until Thursday while crews damp down hot spots, city says",
             ["Fair enough, better safe than sorry",
              ""]),
            ("Council statement: the park fire burned 2 acres of grass, cause under investigation, no buildings damaged",
             ["2 acres is less than I feared honestly",
              "Thank you for an actual factual update",
              "Hope the ducks by the pond are ok 🦆",
              "Investigation should look at the barbecue area imo"]),
            ("Photos from the scene: firefighters finishing up at mill park this evening http://news.example/gallery",
             ["The third photo is stunning, hats off to them",
              "Sharing with the neighbourhood group, thanks",
              "They deserve a raise"]),
            ("Mayor thanks fire crews for quick response at mill park, praises volunteers who helped clear the area",
             ["Well deserved praise", "Proud of this town today"]),
        ],
    },
    "statuegift": {
        "rumours": [
            ("Word is the old Hartmann art collection will be gifted to our museum, board meeting in secret tonight",
             ["A secret meeting? Sounds made up to me",
              "The collection is worth millions, why would they give it away?"]),
            ("Sources claim the bronze statue in the lobby is a stolen piece from the Hartmann estate #statuegift",
             ["That statue has been there since 1987, there are records",
              "Huge if true. Huge.",
              "Allegedly an expert is flying in to verify it"]),
            ("They are saying the museum director resigned over the statue scandal, no announcement yet",
             ["nothing on the museum website about a resignation",
              "I met her yesterday at the cafe, she said nothing about leaving"]),
            ("Rumour: the entire gift will be rejected because the paperwork was forged decades ago",
             ["Forged paperwork? This keeps getting stranger",
              "My aunt works in the archive and never heard of this",
              "Can someone ask the museum directly instead of guessing?",
              "Unbelievable story, following closely 👀"]),
            ("Hearing the city will celebrate special occasion next month to unveil the Hartmann wing, not public yet",
             ["Would love an unveiling party, hope it is real",
              "The museum calendar shows nothing in that week",
              "A new wing would be wonderful for the school tours"]),
        ],
        "non-rumours": [
            ("Museum press office: we have received a donation offer regarding the Hartmann collection and are reviewing it",
             ["Finally an official statement, thank you",
              "Reviewing is the right call, no rush",
              "Hope the review is transparent"]),
            ("The bronze lobby statue was acquired legally in 1987, provenance documents published here http://museum.example/docs",
             ["Good to see the documents released",
              "This should end the silly rumours",
              "Excellent transparency from the museum 👍",
              "Reading the provenance file now, fascinating history"]),
            ("Museum director interview: no resignation, the team is focused on the donation review",
             ["Glad she is staying", "A steady hand, good for the museum"]),
            ("City council agenda for Monday includes the Hartmann donation review, session open to the public",
             ["Public session, nice. I will attend",
              "Finally a chance to ask questions in person"]),
            ("Curators begin cataloguing the offered Hartmann pieces, process expected to take six weeks",
             ["Six weeks sounds quick for a collection that size",
              "Wishing the curators patience, big task",
              "Will there be a public exhibit afterwards?"]),
        ],
    },
    "ferrydelay": {
        "rumours": [
            ("The morning ferry allegedly hit a sandbank, passengers stuck on board for hours they say #ferrydelay",
             ["Stuck for hours?? My dad is on that ferry, no reply to my texts 😟",
              "The ferry app just shows a delay, nothing about a sandbank",
              "Someone on board says they are moving slowly but fine",
              "This harbour needs dredging, been saying it for years",
              "?!?!"]),
            ("Unverified: the ferry engine room took on water, crew pumping it out right now",
             ["Taking on water is serious, why is nobody covering this?",
              "Crew member here: it was a minor leak in a cooling pipe, fixed already",
              "Hope everyone stays safe out there",
              "I am never taking that old boat again, not worth the risk"]),
            ("People claim the ferry captain fell ill and a trainee is steering the boat to port",
             ["A trainee?? That cannot be allowed, surely",
              "The operator says the captain is fine. Stop this nonsense.",
              "Get well soon to whoever is unwell on board 💙"]),
            ("Hearing all afternoon crossings are cancelled and tourists are stranded on the island #ferrydelay",
             ["The 2pm crossing shows as boarding right now, so false?",
              "Stranded on the island sounds like a holiday to me 😄",
              "My hotel guests made the 2pm fine, nobody stranded",
              "News says one cancellation, not all. Breathe, everyone."]),
            ("Rumour that the ferry company is hiding a crack in the hull found during last week inspection",
             ["Inspections are public record, someone should check",
              "A hidden crack would be criminal, careful with accusations"]),
        ],
        "non-rumours": [
            ("Ferry operator: the 7:40 sailing is delayed 50 minutes by fog in the channel, safety first",
             ["Fog again, third time this month", "Better late than sunk, fair play"]),
            ("Update: the 7:40 ferry docked safely at 9:05, all 212 passengers ashore, normal service resumes at noon",
             ["Glad everyone is ashore safe",
              "212 people on the early boat, busier than I thought",
              "Thanks for the clear timeline"]),
            ("Harbour master report: no damage to the ferry, routine inspection passed, fog was the only issue",
             ["A calm factual report, rare these days",
              "Good outcome for all. See you on the noon crossing.",
              "The fog was thick as soup this morning 🌫"]),
            ("Ferry company adds an extra 17:30 sailing today to clear the morning backlog",
             ["Smart move, queues were long", "Taking the extra one, cheers"]),
            ("Island tourism office: visitor numbers unaffected by the morning delay, events running as planned",
             ["The jazz festival starts at six, plenty of time",
              "Good news for the weekend trade",
              "See everyone at the harbour market later"]),
        ],
    },
}

# hand count of the corpus above (checked against the written files)
MANIFEST = {
    "parkfire": {"nr_src": 5, "r_src": 5, "nr_re": 14, "r_re": 18},
    "statuegift": {"nr_src": 5, "r_src": 5, "nr_re": 14, "r_re": 14},
    "ferrydelay": {"nr_src": 5, "r_src": 5, "nr_re": 13, "r_re": 18},
}

_MONTHS = ["Jan", "Feb", "Mar"]


def created_at(serial: int) -> str:
    month = _MONTHS[serial % 3]
    day = 1 + serial % 27
    hh = serial % 24
    mm = (serial * 7) % 60
    return f"Sun {month} {day:02d} {hh:02d}:{mm:02d}:00 +0000 2015"


def main() -> None:
    import shutil

    if TREE.exists():
        shutil.rmtree(TREE)
    records = []
    serial = 0
    next_id = 580000000
    for event, by_label in CORPUS.items():
        for label_dir, threads in by_label.items():
            label = "rumour" if label_dir == "rumours" else "non-rumour"
            for source_text, replies in threads:
                next_id += 7
                src_id = str(next_id)
                thread = TREE / event / label_dir / src_id
                (thread / "source-tweets").mkdir(parents=True)
                (thread / "reactions").mkdir()
                serial += 1
                src = {
                    "id_str": src_id,
                    "text": source_text,
                    "created_at": created_at(serial),
                    "user": {"screen_name": f"user{serial}"},
                }
                (thread / "source-tweets" / f"{src_id}.json").write_text(
                    json.dumps(src, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
                )
                records.append(
                    {"id": src_id, "text": source_text, "event": event, "role": "source",
                     "label": label, "parent_id": None, "created_at": src["created_at"]}
                )
                for reply_text in replies:
                    next_id += 3
                    rid = str(next_id)
                    serial += 1
                    obj = {
                        "id_str": rid,
                        "text": reply_text,
                        "created_at": created_at(serial),
                        "in_reply_to_status_id_str": src_id,
                        "user": {"screen_name": f"user{serial}"},
                    }
                    (thread / "reactions" / f"{rid}.json").write_text(
                        json.dumps(obj, ensure_ascii=False, indent=1) + "\n", encoding="utf-8"
                    )
                    records.append(
                        {"id": rid, "text": reply_text, "event": event, "role": "reaction",
                         "label": label, "parent_id": src_id, "created_at": obj["created_at"]}
                    )

    with open(ROOT / "mini-pheme.jsonl", "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec, ensure_ascii=False) + "\n")

    # verify the hand count against what was written
    tally = {e: {"nr_src": 0, "r_src": 0, "nr_re": 0, "r_re": 0} for e in CORPUS}
    for rec in records:
        side = "r" if rec["label"] == "rumour" else "nr"
        kind = "src" if rec["role"] == "source" else "re"
        tally[rec["event"]][f"{side}_{kind}"] += 1
    assert tally == MANIFEST, f"hand count mismatch: {tally}"
    with open(ROOT / "mini-pheme.manifest.json", "w", encoding="utf-8") as fh:
        json.dump(MANIFEST, fh, indent=2, sort_keys=True)
        fh.write("\n")
    total = len(records)
    threads = sum(len(t) for by in CORPUS.values() for t in by.values())
    print(f"wrote {TREE} ({threads} threads, {total} tweets), jsonl and manifest")


if __name__ == "__main__":
    main()
