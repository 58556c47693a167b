#pragma once

// Generated by tools/gen_builtin_data.sh from data/*.txt; do not edit.

#include <string_view>

namespace reqlint::detail {

inline constexpr std::string_view builtin_abbreviations = R"reqlint(# Abbreviations whose final period never ends a sentence.
# One per line, written without the final period; matching ignores ASCII case.
eg
e.g
ie
i.e
etc
cf
ex
fig
réf
ref
vol
no
n°
p
pp
env
max
min
approx
resp
art
chap
sect
vs
mr
mrs
dr
st
cad
c.-à-d
c.à.d
op
cit
al
)reqlint";

inline constexpr std::string_view builtin_lexicon_fr = R"reqlint(# Closed-class lexicon, French.
# surface<TAB>major[<TAB>subtype][<TAB>ambiguous]; surfaces listed twice carry
# two candidate tags and are resolved by the context rules.
[entries]
et	coordinator
ou	coordinator
mais	coordinator
donc	coordinator
or	coordinator
ni	coordinator
car	coordinator
alors	coordinator
que	subordinator	ambiguous
que	pronoun	relative	ambiguous
qu'	subordinator	ambiguous
qu'	pronoun	relative	ambiguous
si	subordinator	ambiguous
s'	subordinator	ambiguous
s'	pronoun	personal_object	ambiguous
lorsque	subordinator
lorsqu'	subordinator
quand	subordinator
puisque	subordinator
puisqu'	subordinator
quoique	subordinator
quoiqu'	subordinator
il	pronoun	personal_subject	ambiguous
il	pronoun	impersonal	ambiguous
ils	pronoun	personal_subject	ambiguous
ils	pronoun	impersonal	ambiguous
elle	pronoun	personal_subject
elles	pronoun	personal_subject
nous	pronoun	personal_subject
vous	pronoun	personal_subject
le	pronoun	personal_object	ambiguous
la	pronoun	personal_object	ambiguous
les	pronoun	personal_object	ambiguous
l'	pronoun	personal_object	ambiguous
leur	pronoun	personal_object	ambiguous
lui	pronoun	personal_object
eux	pronoun	personal_object
se	pronoun	personal_object
y	pronoun	personal_object	ambiguous
en	pronoun	personal_object	ambiguous
on	pronoun	indefinite
chacun	pronoun	indefinite
chacune	pronoun	indefinite
quelqu'un	pronoun	indefinite
quiconque	pronoun	indefinite
qui	pronoun	relative
dont	pronoun	relative
où	pronoun	relative
lequel	pronoun	relative
laquelle	pronoun	relative
lesquels	pronoun	relative
lesquelles	pronoun	relative
auquel	pronoun	relative
auxquels	pronoun	relative
auxquelles	pronoun	relative
duquel	pronoun	relative
desquels	pronoun	relative
desquelles	pronoun	relative
celui	pronoun	demonstrative
celle	pronoun	demonstrative
ceux	pronoun	demonstrative
celles	pronoun	demonstrative
celui-ci	pronoun	demonstrative
celle-ci	pronoun	demonstrative
ceux-ci	pronoun	demonstrative
celles-ci	pronoun	demonstrative
celui-là	pronoun	demonstrative
celle-là	pronoun	demonstrative
ceux-là	pronoun	demonstrative
celles-là	pronoun	demonstrative
cela	pronoun	demonstrative
ceci	pronoun	demonstrative
ça	pronoun	demonstrative

[verb_cues]
est
sont
sera
seront
serait
seraient
était
étaient
soit
soient
être
fut
a
ont
avait
avaient
aurait
auraient
doit
doivent
devrait
devraient
peut
peuvent
pourrait
pourraient
faut
fallait
faudrait
met
mettent
permet
permettent
donne
donnent
gère
gèrent
respecte
respectent
utilise
utilisent
rejette
rejettent
reste
restent
contient
contiennent
vérifie
vérifient
calcule
calculent
génère
génèrent
envoie
envoient
transmet
transmettent
fournit
fournissent
définit
définissent
compare
comparent
active
activent
désactive
désactivent
initialise
initialisent
réinitialise
réinitialisent
ré-initialise
ré-initialisent
positionne
positionnent
effectue
effectuent
assure
assurent
traite
traitent
mémorise
enregistre
émet
émettent
reçoit
reçoivent
accepte
acceptent
produit
produisent
lit
lisent
écrit
écrivent
indique
indiquent
correspond
correspondent
dépend
dépendent
concerne
concernent
comporte
comportent
comprend
comprennent
existe
existent
suffit
convient
semble
semblent
*ra
*ront
*rons
*era
*eront

[impersonal_verbs]
faut
faudra
fallait
faudrait
s'agit
s'agira
suffit
suffira
convient
conviendra
importe
semble
existe
existera

[impersonal_adjectives]
utile
inutile
nécessaire
possible
impossible
interdit
obligatoire
recommandé
souhaitable
important
préférable
indispensable
autorisé
permis
prévu
conseillé
essentiel
évident
clair
probable
difficile
facile
normal
demandé
requis
exigé
préconisé
envisageable
acceptable
admis
toléré
suffisant
impératif

[adjective_cues]
grand
grande
grands
grandes
petit
petite
petits
petites
long
longue
court
courte
élevé
élevée
faible
faibles
rapide
rapidement
lent
lente
lentement
souvent
peu
bien
mal
tard
tôt
fort
forte
vite
nombreux
nombreuses
proche
loin
haut
haute
bas
basse

[determiners]
le
la
les
l'
un
une
des
du
au
aux
ce
cet
cette
ces
son
sa
ses
leur
leurs
mon
ma
mes
notre
nos
votre
vos
chaque
tout
toute
tous
toutes
plusieurs
quelques
aucun
aucune
certains
certaines
ledit
ladite
lesdits
lesdites
dudit
)reqlint";

inline constexpr std::string_view builtin_lexicon_en = R"reqlint(# Closed-class lexicon, English.
# surface<TAB>major[<TAB>subtype][<TAB>ambiguous]; surfaces listed twice carry
# two candidate tags and are resolved by the context rules.
[entries]
and	coordinator
or	coordinator
but	coordinator
nor	coordinator
then	coordinator
if	subordinator
unless	subordinator
when	subordinator
whenever	subordinator
while	subordinator
because	subordinator
although	subordinator
though	subordinator
until	subordinator
whereas	subordinator
whether	subordinator
that	subordinator	ambiguous
that	pronoun	relative	ambiguous
that	pronoun	demonstrative	ambiguous
it	pronoun	personal_subject	ambiguous
it	pronoun	impersonal	ambiguous
he	pronoun	personal_subject
she	pronoun	personal_subject
they	pronoun	personal_subject
we	pronoun	personal_subject
you	pronoun	personal_subject
him	pronoun	personal_object
them	pronoun	personal_object
us	pronoun	personal_object
itself	pronoun	personal_object
himself	pronoun	personal_object
herself	pronoun	personal_object
themselves	pronoun	personal_object
this	pronoun	demonstrative	ambiguous
these	pronoun	demonstrative	ambiguous
those	pronoun	demonstrative	ambiguous
which	pronoun	relative
who	pronoun	relative
whom	pronoun	relative
whose	pronoun	relative
someone	pronoun	indefinite
anyone	pronoun	indefinite
everyone	pronoun	indefinite
somebody	pronoun	indefinite
anybody	pronoun	indefinite
nobody	pronoun	indefinite
something	pronoun	indefinite
anything	pronoun	indefinite
everything	pronoun	indefinite

[verb_cues]
is
are
was
were
be
been
being
am
has
have
had
shall
will
should
must
may
might
can
could
would
does
do
did
contains
provides
sends
receives
checks
computes
generates
manages
uses
updates
resets
rejects
accepts
returns
displays
stores
complies
conforms
gives
allows
permits
defines
includes
supports

[impersonal_verbs]
seems
appears

[impersonal_adjectives]
necessary
possible
impossible
required
mandatory
forbidden
prohibited
recommended
useful
important
essential
preferable
desirable
advisable
permitted
allowed
acceptable
expected
likely
unlikely
clear
evident
obvious

[adjective_cues]

[determiners]
the
a
an
this
that
these
those
its
their
his
her
our
your
my
each
every
any
some
no
all
both
either
neither
such
)reqlint";

} // namespace reqlint::detail
