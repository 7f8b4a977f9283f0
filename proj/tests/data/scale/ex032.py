b = eval(input())
x = eval(input())
a = b + x
print(a)
print(a + 1)
print(a == b + x)
print([b, x, a])
