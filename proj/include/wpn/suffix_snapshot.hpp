#pragma once

#include <string_view>

namespace wpn {

// Static snapshot of well-known public suffixes, same line format the
// loader accepts from disk. Not exhaustive; unknown suffixes fall back to
// final-label removal.
inline constexpr std::string_view kSuffixSnapshot = R"(# generic top-level domains
com
org
net
edu
gov
mil
int
info
biz
name
pro
mobi
asia
cat
jobs
tel
travel
museum
aero
coop
post
xxx
app
dev
io
ai
co
me
tv
cc
ws
fm
am
news
online
site
shop
store
tech
cloud
live
life
world
today
space
website
press
host
hosting
fun
club
vip
win
bid
loan
date
download
stream
review
trade
science
party
racing
accountant
faith
cricket
top
xyz
icu
work
link
click
email
network
systems
solutions
services
digital
agency
company
group
team
zone
plus
center
city
social
media
studio
design
software
tools
expert
guru
ninja
rocks
codes
run
page
wiki
blog
chat
games
finance
capital
money
bank
insurance
legal
health
care
clinic
dental
doctor
fit
fitness
yoga
shopping
sale
deals
discount
gifts
toys
fashion
shoes
jewelry
watch
photo
photos
pictures
gallery
video
film
music
band
events
tickets
travelers
flights
vacations
tours
restaurant
cafe
bar
pub
pizza
recipes
kitchen
garden
flowers
farm
energy
solar
eco
green
earth
land
estate
realty
properties
rentals
apartments
house
casa
auto
autos
car
cars
bike
taxi
limo
express
delivery
shipping
cargo
supply
supplies
industries
engineering
construction
builders
contractors
plumbing
repair
cleaning
academy
school
education
courses
training
university
college
institute
foundation
charity
ngo
church
bible
faith
# country-code top-level domains
ac
ad
ae
af
ag
al
ao
ar
as
at
au
aw
az
ba
bb
bd
be
bf
bg
bh
bi
bj
bm
bn
bo
br
bs
bt
bw
by
bz
ca
cd
cf
cg
ch
ci
ck
cl
cm
cn
cr
cu
cv
cw
cx
cy
cz
de
dj
dk
dm
do
dz
ec
ee
eg
es
et
eu
fi
fj
fk
fo
fr
ga
gd
ge
gf
gg
gh
gi
gl
gm
gn
gp
gq
gr
gs
gt
gu
gw
gy
hk
hm
hn
hr
ht
hu
id
ie
il
im
in
iq
ir
is
it
je
jm
jo
jp
ke
kg
kh
ki
km
kn
kp
kr
kw
ky
kz
la
lb
lc
li
lk
lr
ls
lt
lu
lv
ly
ma
mc
md
mg
mh
mk
ml
mm
mn
mo
mp
mq
mr
ms
mt
mu
mv
mw
mx
my
mz
na
nc
ne
nf
ng
ni
nl
no
np
nr
nu
nz
om
pa
pe
pf
pg
ph
pk
pl
pm
pn
pr
ps
pt
pw
py
qa
re
ro
rs
ru
rw
sa
sb
sc
sd
se
sg
sh
si
sk
sl
sm
sn
so
sr
ss
st
su
sv
sx
sy
sz
tc
td
tf
tg
th
tj
tk
tl
tm
tn
to
tr
tt
tw
tz
ua
ug
uk
us
uy
uz
va
vc
ve
vg
vi
vn
vu
wf
ye
yt
za
zm
zw
# common second-level registrations
co.uk
org.uk
me.uk
ltd.uk
plc.uk
net.uk
sch.uk
ac.uk
gov.uk
nhs.uk
police.uk
com.au
net.au
org.au
edu.au
gov.au
id.au
asn.au
co.nz
net.nz
org.nz
govt.nz
ac.nz
school.nz
geek.nz
co.jp
or.jp
ne.jp
ac.jp
ad.jp
ed.jp
go.jp
gr.jp
lg.jp
com.br
net.br
org.br
gov.br
edu.br
mil.br
art.br
blog.br
eco.br
com.cn
net.cn
org.cn
gov.cn
edu.cn
ac.cn
mil.cn
com.hk
net.hk
org.hk
edu.hk
gov.hk
idv.hk
com.tw
net.tw
org.tw
edu.tw
gov.tw
idv.tw
co.kr
ne.kr
or.kr
re.kr
go.kr
ac.kr
pe.kr
co.in
net.in
org.in
firm.in
gen.in
ind.in
ac.in
edu.in
res.in
gov.in
mil.in
nic.in
com.sg
net.sg
org.sg
edu.sg
gov.sg
per.sg
com.my
net.my
org.my
edu.my
gov.my
mil.my
name.my
co.id
net.id
or.id
web.id
ac.id
sch.id
go.id
mil.id
biz.id
my.id
com.vn
net.vn
org.vn
edu.vn
gov.vn
int.vn
ac.vn
biz.vn
info.vn
name.vn
pro.vn
health.vn
co.th
in.th
or.th
net.th
ac.th
go.th
mi.th
com.ph
net.ph
org.ph
edu.ph
gov.ph
mil.ph
ngo.ph
i.ph
com.pk
net.pk
org.pk
edu.pk
gov.pk
fam.pk
biz.pk
web.pk
gok.pk
gob.pk
com.bd
net.bd
org.bd
edu.bd
gov.bd
ac.bd
mil.bd
com.lk
net.lk
org.lk
edu.lk
gov.lk
sch.lk
ltd.lk
assn.lk
grp.lk
hotel.lk
com.np
net.np
org.np
edu.np
gov.np
mil.np
aero.np
asia.np
biz.np
coop.np
info.np
museum.np
name.np
pro.np
co.il
net.il
org.il
ac.il
gov.il
idf.il
k12.il
muni.il
com.tr
net.tr
org.tr
edu.tr
gov.tr
mil.tr
k12.tr
av.tr
bbs.tr
bel.tr
biz.tr
dr.tr
gen.tr
info.tr
name.tr
pol.tr
tel.tr
tsk.tr
tv.tr
web.tr
com.sa
net.sa
org.sa
edu.sa
gov.sa
med.sa
pub.sa
sch.sa
com.eg
net.eg
org.eg
edu.eg
gov.eg
eun.eg
mil.eg
name.eg
sci.eg
com.ae
net.ae
org.ae
ac.ae
gov.ae
mil.ae
sch.ae
com.qa
net.qa
org.qa
edu.qa
gov.qa
mil.qa
name.qa
sch.qa
com.kw
net.kw
org.kw
edu.kw
gov.kw
emb.kw
ind.kw
com.jo
net.jo
org.jo
edu.jo
gov.jo
mil.jo
name.jo
sch.jo
com.lb
net.lb
org.lb
edu.lb
gov.lb
co.za
net.za
org.za
ac.za
edu.za
gov.za
law.za
mil.za
nom.za
school.za
web.za
co.ke
ne.ke
or.ke
ac.ke
go.ke
info.ke
me.ke
mobi.ke
sc.ke
com.ng
net.ng
org.ng
edu.ng
gov.ng
i.ng
mil.ng
mobi.ng
name.ng
sch.ng
co.tz
ne.tz
or.tz
ac.tz
go.tz
hotel.tz
info.tz
me.tz
mil.tz
mobi.tz
sc.tz
tv.tz
co.ug
ne.ug
or.ug
ac.ug
go.ug
sc.ug
com.gh
net.gh
org.gh
edu.gh
gov.gh
mil.gh
com.et
net.et
org.et
biz.et
edu.et
gov.et
info.et
name.et
com.mx
net.mx
org.mx
edu.mx
gob.mx
com.ar
net.ar
org.ar
edu.ar
gob.ar
int.ar
mil.ar
musica.ar
tur.ar
com.co
net.co
org.co
edu.co
gov.co
mil.co
nom.co
com.pe
net.pe
org.pe
edu.pe
gob.pe
mil.pe
nom.pe
com.ve
net.ve
org.ve
co.ve
e12.ve
edu.ve
gob.ve
info.ve
mil.ve
web.ve
com.ec
net.ec
org.ec
edu.ec
fin.ec
gob.ec
gov.ec
info.ec
k12.ec
med.ec
mil.ec
pro.ec
com.bo
net.bo
org.bo
edu.bo
gob.bo
int.bo
mil.bo
tv.bo
web.bo
com.py
net.py
org.py
coop.py
edu.py
gov.py
mil.py
com.uy
net.uy
org.uy
edu.uy
gub.uy
mil.uy
com.gt
net.gt
org.gt
edu.gt
gob.gt
ind.gt
mil.gt
com.sv
edu.sv
gob.sv
org.sv
red.sv
com.pa
net.pa
org.pa
abo.pa
ac.pa
edu.pa
gob.pa
ing.pa
med.pa
nom.pa
sld.pa
com.do
net.do
org.do
art.do
edu.do
gob.do
gov.do
mil.do
sld.do
web.do
com.pl
net.pl
org.pl
aid.pl
agro.pl
atm.pl
auto.pl
biz.pl
edu.pl
gmina.pl
gsm.pl
info.pl
mail.pl
media.pl
mil.pl
nom.pl
pc.pl
powiat.pl
priv.pl
realestate.pl
rel.pl
sex.pl
shop.pl
sklep.pl
sos.pl
szkola.pl
targi.pl
tm.pl
tourism.pl
travel.pl
turystyka.pl
com.ua
net.ua
org.ua
in.ua
edu.ua
gov.ua
co.ua
pp.ua
com.ru
net.ru
org.ru
int.ru
msk.ru
spb.ru
com.by
of.by
com.gr
net.gr
org.gr
edu.gr
gov.gr
com.pt
net.pt
org.pt
edu.pt
gov.pt
int.pt
nome.pt
publ.pt
com.es
nom.es
org.es
gob.es
edu.es
com.ro
org.ro
tm.ro
nt.ro
nom.ro
info.ro
rec.ro
arts.ro
firm.ro
store.ro
www.ro
co.at
or.at
ac.at
gv.at
priv.at
co.hu
info.hu
org.hu
priv.hu
sport.hu
tm.hu
2000.hu
agrar.hu
bolt.hu
casino.hu
city.hu
erotica.hu
erotika.hu
film.hu
forum.hu
games.hu
hotel.hu
ingatlan.hu
jogasz.hu
konyvelo.hu
lakas.hu
media.hu
news.hu
reklam.hu
sex.hu
shop.hu
suli.hu
szex.hu
tozsde.hu
utazas.hu
video.hu
co.cz
com.de
com.se
)";

} // namespace wpn
