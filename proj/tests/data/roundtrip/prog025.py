def f1(p2):
    t3 = ((p2 + 8) if not True else (p2 + p2))
    t4 = p2
    t5 = t4
    return [eval(input()), -5][0]
def f6(p7):
    t8 = -((p7 if False else 8))
    t9 = f1(p7)
    t10 = -3
    print(-t9)
    return t8
print(eval(input()))
print((15 + 0) == 11 + 5)
print((0 + 0) + 13)
l11 = [5 + 18, (16 + 3)]
print(False)
l11[1] = l11[1]
l11[0] = (13 + 4)
v12 = ([18, 19][1] if 19 != 0 else f1(20))
print((-8 + (v12 + v12)))
