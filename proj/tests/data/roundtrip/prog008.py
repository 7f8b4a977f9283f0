print(((6 + 17) + -5))
print(not True or 19 != 1)
d1 = {4: 10}
d1[4] = 12
d1[4] = -6
l2 = [eval(input()), eval(input())]
print(10)
