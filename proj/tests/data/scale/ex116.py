x = eval(input())
a = eval(input())
print(x and a)
print(x or a)
print(not x)
print(x != a)
print(1 if x and not a else 0)
