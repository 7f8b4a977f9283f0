a = eval(input())
s = a == 15
print(s)
print(1 if s else 0)
print(a + 15)
print([a, s])
